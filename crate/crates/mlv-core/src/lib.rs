//! Exact computer algebra for multiple L-values at roots of unity.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`] — exact coefficient rings: rationals and polynomials in a
//!   formal parameter `c`.
//! * [`algebra`] — labels, letters, words and non-commutative polynomials
//!   in `x` and `y_s`.
//! * [`linmaps`] — the linear maps and automorphisms acting on words
//!   (`φ`, `ι`, `α`, `γ`, `⋆`, `d_sh`, `I`, `M_s`, `N_s`, `d_*`, `F_s`, `σ_s`).
//! * [`hproducts`] — the four harmonic (quasi-shuffle) products.
//! * [`derivations`] — the derivation tower `∂_n`, its `c`-extended
//!   variants and the weight-truncated automorphisms `Δ̂` and `Φ`.
//! * [`relations`] — relation families over `μ_r`, exact rank, tables.
//! * [`seqnum`] — truncated MLVs, sequence transforms, Newton series,
//!   polylogarithm series and numeric MLV estimates.
//! * [`suites`] — seeded randomized identity checks shared by the CLI and
//!   the test-suite.

pub mod algebra;
pub mod derivations;
pub mod error;
pub mod hproducts;
pub mod linmaps;
pub mod relations;
pub mod scalar;
pub mod seqnum;
pub mod suites;

pub use algebra::{Label, LabelDomain, Letter, NcPoly, Word, WordClass};
pub use error::{Error, Result};
pub use scalar::{Coeff, QPoly, Q};
