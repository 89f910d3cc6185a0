//! Seeded randomized identity checks shared by the CLI (`verify`) and the
//! test-suite.
//!
//! A *suite* is a list of properties; every property runs a number of
//! cases drawn from a ChaCha generator seeded by the user seed and the
//! property name, so a fixed seed reproduces the same cases bit for bit.
//! Every check is an exact equality unless its name says otherwise (the
//! `newton` suite contains one toleranced floating-point comparison).
//!
//! A property can be marked *informational*: it is run and reported but
//! does not decide the verdict.  This is used for a formula whose printed
//! form is known not to hold while a corrected form is checked alongside.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;

mod maps;
pub mod numeric;
mod random;
mod sequences;
mod towers;

/// The generator used by every suite.
pub type SuiteRng = ChaCha8Rng;

/// A group of related properties.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Binomial inversion, sequence operators, difference arrays.
    Inversion,
    /// Landen-type series identities and the automorphism algebra.
    Landen,
    /// Harmonic products and the block maps.
    Products,
    /// Evaluation homomorphisms of truncated sums.
    Homs,
    /// Commutativity and structure of the derivation tower.
    Commute,
    /// Extended derivations versus harmonic products and completions.
    Tower,
    /// Newton series.
    Newton,
}

impl Suite {
    /// Every suite, in report order.
    pub const ALL: [Suite; 7] =
        [Suite::Inversion, Suite::Landen, Suite::Products, Suite::Homs, Suite::Commute, Suite::Tower, Suite::Newton];

    /// Command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Inversion => "inversion",
            Suite::Landen => "landen",
            Suite::Products => "products",
            Suite::Homs => "homs",
            Suite::Commute => "commute",
            Suite::Tower => "tower",
            Suite::Newton => "newton",
        }
    }

    /// Parse a command-line name.
    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Outcome of one property.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    /// Suite name.
    pub suite: &'static str,
    /// Property name.
    pub property: &'static str,
    /// Cases run.
    pub cases: usize,
    /// Cases that passed.
    pub passed: usize,
    /// Whether the property decides the verdict.
    pub gating: bool,
    /// First error or failing case, if any.
    pub note: Option<String>,
}

impl PropertyOutcome {
    /// All cases passed.
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases
    }

    /// Passed, or informational.
    pub fn ok(&self) -> bool {
        !self.gating || self.all_passed()
    }
}

/// Per-property seed: the user seed mixed with an FNV-1a hash of the name.
fn property_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

/// Shared driver: run `cases` cases of one property.
pub(crate) struct Runner {
    suite: Suite,
    cases: usize,
    seed: u64,
    out: Vec<PropertyOutcome>,
}

impl Runner {
    fn new(suite: Suite, cases: usize, seed: u64) -> Self {
        Runner { suite, cases, seed, out: Vec::new() }
    }

    /// Cases requested by the caller.
    pub(crate) fn cases(&self) -> usize {
        self.cases
    }

    /// Run a gating property with the requested number of cases.
    pub(crate) fn check(&mut self, name: &'static str, f: impl FnMut(&mut SuiteRng, usize) -> Result<bool>) {
        let n = self.cases;
        self.run(name, n, true, f);
    }

    /// Run a gating property with an explicit case count (used for
    /// exhaustive scans over a fixed list and for expensive properties).
    pub(crate) fn check_n(
        &mut self,
        name: &'static str,
        cases: usize,
        f: impl FnMut(&mut SuiteRng, usize) -> Result<bool>,
    ) {
        self.run(name, cases, true, f);
    }

    /// Run an informational property.
    pub(crate) fn inform(&mut self, name: &'static str, f: impl FnMut(&mut SuiteRng, usize) -> Result<bool>) {
        let n = self.cases;
        self.run(name, n, false, f);
    }

    fn run(
        &mut self,
        name: &'static str,
        cases: usize,
        gating: bool,
        mut f: impl FnMut(&mut SuiteRng, usize) -> Result<bool>,
    ) {
        let mut rng = SuiteRng::seed_from_u64(property_seed(self.seed, name));
        let mut passed = 0;
        let mut note = None;
        for i in 0..cases {
            match f(&mut rng, i) {
                Ok(true) => passed += 1,
                Ok(false) => {
                    note.get_or_insert_with(|| format!("case {i} failed"));
                }
                Err(e) => {
                    note.get_or_insert_with(|| format!("case {i}: {e}"));
                }
            }
        }
        self.out.push(PropertyOutcome { suite: self.suite.name(), property: name, cases, passed, gating, note });
    }
}

/// Run one suite with `cases` cases per property.
pub fn run_suite(suite: Suite, cases: usize, seed: u64) -> Vec<PropertyOutcome> {
    let mut r = Runner::new(suite, cases.max(1), seed);
    match suite {
        Suite::Inversion => sequences::inversion(&mut r),
        Suite::Landen => maps::landen(&mut r),
        Suite::Products => maps::products(&mut r),
        Suite::Homs => sequences::homs(&mut r),
        Suite::Commute => towers::commute(&mut r),
        Suite::Tower => towers::tower(&mut r),
        Suite::Newton => sequences::newton(&mut r),
    }
    r.out
}
