//! The five subcommands.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use mlv_core::algebra::{Label, LabelDomain, Letter, NcPoly, Word};
use mlv_core::relations::{admissible_count, generate, generator_count, table_cell, RelationDump, RelationFamily};
use mlv_core::seqnum::{mlv_numeric, newton_eval, Accel, MlvKind, NewtonAccel, NewtonKind};
use mlv_core::suites::{run_suite, PropertyOutcome, Suite};
use mlv_core::Q;

use crate::args::{
    AccelArg, Caps, EvalArgs, FamilyArg, Global, KindArg, NewtonArgs, NewtonKindArg, RelationsArgs, SingleFamily,
    TablesArgs, VerifyArgs,
};
use crate::error::CliError;
use crate::fixture::Published;

/// What a subcommand produced: the bytes to write and whether every check
/// passed (`false` maps to exit code 1).
pub struct Outcome {
    /// Rendered output.
    pub bytes: Vec<u8>,
    /// All checks passed.
    pub passed: bool,
    /// Human-readable lines for standard error.
    pub notes: Vec<String>,
}

fn check_caps(caps: &Caps, family: RelationFamily, r: u32, weight: usize) -> Result<(), CliError> {
    let columns = admissible_count(r, weight);
    let rows = generator_count(family, r, weight);
    if caps.force || (columns <= caps.max_columns && rows <= caps.max_rows) {
        return Ok(());
    }
    Err(CliError::ResourceCap {
        r,
        weight,
        family: family.name(),
        columns,
        rows,
        max_columns: caps.max_columns,
        max_rows: caps.max_rows,
    })
}

/// One line of `tables` output.
#[derive(Debug, Serialize)]
struct TableLine {
    family: RelationFamily,
    r: u32,
    weight: usize,
    rank: usize,
    basis_count: usize,
    /// Published rank (only with `--check`, when the bundled table has one).
    expected: Option<usize>,
    /// `match`, `mismatch` or `unpublished` (only with `--check`).
    status: Option<&'static str>,
}

/// `tables`: exact ranks of each requested family at each weight.
pub fn tables(g: &Global, a: &TablesArgs) -> Result<Outcome, CliError> {
    if a.weights.start < 2 {
        return Err(CliError::Usage("weights must be at least 2".into()));
    }
    let families: Vec<RelationFamily> = match a.family {
        FamilyArg::Deriv => vec![RelationFamily::Deriv],
        FamilyArg::Ext => vec![RelationFamily::Ext],
        FamilyArg::Lin => vec![RelationFamily::Lin],
        FamilyArg::All => RelationFamily::ALL.to_vec(),
    };
    let cells: Vec<(RelationFamily, usize)> =
        families.iter().flat_map(|&f| (a.weights.start..=a.weights.end).map(move |n| (f, n))).collect();
    for &(f, n) in &cells {
        check_caps(&a.caps, f, g.r, n)?;
    }

    let mut records = cells
        .par_iter()
        .map(|&(f, n)| table_cell(g.r, n, &[f]).map(|mut v| v.remove(0)))
        .collect::<Result<Vec<_>, _>>()?;
    records.sort_by_key(|t| (t.family, t.weight));

    let published = a.check.then(Published::load);
    let mut passed = true;
    let mut notes = Vec::new();
    let lines: Vec<TableLine> = records
        .into_iter()
        .map(|t| {
            let (expected, status) = match &published {
                None => (None, None),
                Some(p) => {
                    if let Some(count) = p.index_sets(t.r, t.weight).filter(|c| *c != t.basis_count) {
                        passed = false;
                        notes.push(format!(
                            "mismatch: r={} weight {}: {} basis words, published {count}",
                            t.r, t.weight, t.basis_count
                        ));
                    }
                    let expected = p.rank(t.family, t.r, t.weight);
                    let status = match expected {
                        None => "unpublished",
                        Some(e) if e == t.rank => "match",
                        Some(e) => {
                            passed = false;
                            notes.push(format!(
                                "mismatch: r={} weight {} {}: computed {} published {e}",
                                t.r, t.weight, t.family, t.rank
                            ));
                            "mismatch"
                        }
                    };
                    (expected, Some(status))
                }
            };
            TableLine { family: t.family, r: t.r, weight: t.weight, rank: t.rank, basis_count: t.basis_count, expected, status }
        })
        .collect();
    let bytes = crate::output::render(g.format, &lines, &lines)?;
    Ok(Outcome { bytes, passed, notes })
}

/// JSON shape of `relations`.
#[derive(Debug, Serialize)]
struct RelationsReport {
    rank: usize,
    generated: usize,
    #[serde(flatten)]
    dump: RelationDump,
}

/// One CSV line of `relations`: a single non-zero coefficient.
#[derive(Debug, Serialize)]
struct RelationEntry<'a> {
    row: usize,
    provenance: &'a str,
    word: &'a str,
    coeff: &'a str,
}

/// `relations`: the rows of one family at one weight.
pub fn relations(g: &Global, a: &RelationsArgs) -> Result<Outcome, CliError> {
    if a.weight < 2 {
        return Err(CliError::Usage("weight must be at least 2".into()));
    }
    let family = match a.family {
        SingleFamily::Deriv => RelationFamily::Deriv,
        SingleFamily::Ext => RelationFamily::Ext,
        SingleFamily::Lin => RelationFamily::Lin,
    };
    check_caps(&a.caps, family, g.r, a.weight)?;
    let m = generate(family, g.r, a.weight)?;
    let report = RelationsReport { rank: m.rank(), generated: m.generated, dump: m.dump() };
    let entries: Vec<RelationEntry> = report
        .dump
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.coeffs.iter().map(move |(w, c)| RelationEntry { row: i, provenance: &row.provenance, word: w, coeff: c })
        })
        .collect();
    let bytes = crate::output::render(g.format, &report, &entries)?;
    let notes = vec![format!(
        "r={} weight {} {}: {} rows, rank {} over {} basis words",
        g.r,
        a.weight,
        family,
        report.dump.rows.len(),
        report.rank,
        report.dump.basis.len()
    )];
    Ok(Outcome { bytes, passed: true, notes })
}

/// JSON shape of `verify`.
#[derive(Debug, Serialize)]
struct VerifyReport {
    seed: u64,
    cases: u64,
    gating_failures: usize,
    properties: Vec<PropertyOutcome>,
}

/// One CSV line of `verify`.
#[derive(Debug, Serialize)]
struct VerifyLine<'a> {
    suite: &'a str,
    property: &'a str,
    cases: usize,
    passed: usize,
    gating: bool,
    note: &'a str,
}

/// `verify`: randomized identity suites.
pub fn verify(g: &Global, a: &VerifyArgs) -> Result<Outcome, CliError> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        let s = Suite::parse(&a.suite).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(Suite::name).collect();
            CliError::Usage(format!("unknown suite `{}`; expected one of {} or all", a.suite, names.join(", ")))
        })?;
        vec![s]
    };
    let cases = usize::try_from(a.cases).map_err(|_| CliError::Usage("too many cases".into()))?;
    let properties: Vec<PropertyOutcome> =
        suites.par_iter().map(|&s| run_suite(s, cases, g.seed)).collect::<Vec<_>>().concat();
    let failing: Vec<&PropertyOutcome> = properties.iter().filter(|o| !o.ok()).collect();
    let notes = failing
        .iter()
        .map(|o| format!("failed: {}/{} {}/{}", o.suite, o.property, o.passed, o.cases))
        .collect();
    let gating_failures = failing.len();
    let lines: Vec<VerifyLine> = properties
        .iter()
        .map(|o| VerifyLine {
            suite: o.suite,
            property: o.property,
            cases: o.cases,
            passed: o.passed,
            gating: o.gating,
            note: o.note.as_deref().unwrap_or(""),
        })
        .collect();
    let report = VerifyReport { seed: g.seed, cases: a.cases, gating_failures, properties: properties.clone() };
    let bytes = crate::output::render(g.format, &report, &lines)?;
    Ok(Outcome { bytes, passed: gating_failures == 0, notes })
}

/// `eval`: numeric MLV by summation.
pub fn eval(g: &Global, a: &EvalArgs) -> Result<Outcome, CliError> {
    let word = Word::parse(&a.word, LabelDomain::Cyclic(g.r))?;
    if a.m < 8 {
        return Err(CliError::Usage("--m must be at least 8".into()));
    }
    let kind = match a.kind {
        KindArg::Sh => MlvKind::Sh,
        KindArg::Ast => MlvKind::Ast,
    };
    let accel = match a.accel {
        AccelArg::None => Accel::None,
        AccelArg::Aitken => Accel::Aitken,
    };
    let result = mlv_numeric(&NcPoly::<Q>::from_word(word), kind, a.m, accel)?;
    let bytes = crate::output::render(g.format, &result, std::slice::from_ref(&result))?;
    Ok(Outcome { bytes, passed: true, notes: Vec::new() })
}

/// Re-express a cyclic-domain word over exact complex-rational labels.
fn to_complex_labels(w: &Word, r: u32) -> Result<Word, CliError> {
    let letters = w
        .letters()
        .iter()
        .map(|l| match l {
            Letter::X => Ok(Letter::X),
            Letter::Y(s) => s.to_crat().map(|z| Letter::Y(Label::num(z))).ok_or_else(|| {
                CliError::Usage(format!(
                    "label {s} of μ_{r} is not a complex rational; pass --rational and give labels as p/q"
                ))
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word(letters))
}

/// JSON shape of `newton`.
#[derive(Debug, Serialize)]
struct NewtonReport {
    word: String,
    z_re: f64,
    z_im: f64,
    kind: NewtonKind,
    #[serde(flatten)]
    result: mlv_core::seqnum::NewtonResult,
}

/// `newton`: the Newton series of a truncated MLV at a complex point.
pub fn newton(g: &Global, a: &NewtonArgs) -> Result<Outcome, CliError> {
    let word = if a.rational {
        Word::parse(&a.word, LabelDomain::Complex)?
    } else {
        to_complex_labels(&Word::parse(&a.word, LabelDomain::Cyclic(g.r))?, g.r)?
    };
    if !(a.z.is_finite() && a.z_im.is_finite()) {
        return Err(CliError::Usage("--z and --z-im must be finite".into()));
    }
    let kind = match a.kind {
        NewtonKindArg::Pinned => NewtonKind::Pinned,
        NewtonKindArg::Cumulative => NewtonKind::Cumulative,
    };
    let accel = match a.accel {
        AccelArg::None => NewtonAccel::None,
        AccelArg::Aitken => NewtonAccel::Aitken,
    };
    let z = Complex64::new(a.z, a.z_im);
    let result = newton_eval(&NcPoly::<Q>::from_word(word), kind, z, a.terms, accel)?;
    let report = NewtonReport { word: a.word.clone(), z_re: a.z, z_im: a.z_im, kind, result };
    let bytes = crate::output::render(g.format, &report, std::slice::from_ref(&report))?;
    Ok(Outcome { bytes, passed: true, notes: Vec::new() })
}
