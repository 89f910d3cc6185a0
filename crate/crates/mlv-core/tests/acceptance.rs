//! End-to-end acceptance run: one `PASS`/`FAIL` line per criterion.
//!
//! Covers the published relation-rank tables (exact), nesting of the three
//! relation families, every randomized identity suite, and the toleranced
//! numeric checks.  Informational properties (printed formulas known not
//! to hold as printed) are reported on `INFO` lines and never gate.
//! The process exits non-zero if any gating criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use mlv_core::algebra::{enumerate_words, Label, LabelDomain, NcPoly, Word, WordClass};
use mlv_core::relations::{admissible_count, full_cell, CellReport, RelationFamily};
use mlv_core::scalar::{q, Q};
use mlv_core::seqnum::{mlv_numeric, Accel, MlvKind};
use mlv_core::suites::numeric::{difference_decay_ratios, lin_row_residual, quadratic_relation_values};
use mlv_core::suites::{run_suite, Suite};

const SEED: u64 = 20_240_601;

/// `(r, first weight, deriv, ext, lin)`.
type TableRow = (u32, usize, &'static [usize], &'static [usize], &'static [usize]);

/// Published ranks.
const TABLES: &[TableRow] = &[
    (1, 3, &[1, 2, 5, 10, 22, 44, 90, 181], &[1, 2, 5, 10, 23, 46, 98, 200], &[1, 2, 5, 10, 23, 46, 98, 200]),
    (2, 3, &[4, 14, 46, 140], &[4, 14, 48, 150], &[4, 14, 48, 150]),
    (3, 3, &[9, 42, 177], &[9, 42, 183], &[9, 42, 183]),
    (4, 3, &[16, 92], &[16, 92], &[16, 92]),
    (5, 3, &[25, 170], &[25, 170], &[25, 170]),
    (6, 3, &[36], &[36], &[36]),
];

/// Cells beyond the required range: `(r, weight, deriv, ext, lin)`.
const STRETCH: &[(u32, usize, usize, usize, usize)] =
    &[(1, 11, 363, 410, 413), (2, 7, 426, 464, 468), (4, 5, 476, 488, 488), (6, 4, 282, 282, 282)];

/// Published "#{index set}" rows: `(r, first weight, counts)`.
const INDEX_SETS: &[(u32, usize, &[usize])] = &[
    (1, 3, &[2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096]),
    (2, 3, &[12, 36, 108, 324, 972, 2916]),
    (3, 3, &[36, 144, 576, 2304]),
    (4, 3, &[80, 400, 2000]),
    (5, 3, &[150, 900, 5400]),
    (6, 3, &[252, 1764]),
];

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, ok: bool, name: &str, detail: impl AsRef<str>) {
        if !ok {
            self.failures += 1;
        }
        println!("{} {name} — {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
    }

    fn info(&self, ok: bool, name: &str, detail: impl AsRef<str>) {
        println!("INFO {name} — {} ({})", detail.as_ref(), if ok { "holds" } else { "does not hold" });
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Compute every requested cell on a small thread pool.
fn compute_cells(cells: &[(u32, usize)]) -> Vec<((u32, usize), CellReport)> {
    let queue = Mutex::new(cells.to_vec());
    let done = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism().map_or(2, |n| n.get()).min(8);
    std::thread::scope(|sc| {
        for _ in 0..workers {
            sc.spawn(|| loop {
                let Some(cell) = queue.lock().unwrap().pop() else { break };
                let report = full_cell(cell.0, cell.1).expect("relation generation failed");
                done.lock().unwrap().push((cell, report));
            });
        }
    });
    let mut out = done.into_inner().unwrap();
    out.sort_by_key(|(c, _)| *c);
    out
}

fn rank(cells: &[((u32, usize), CellReport)], r: u32, n: usize, f: RelationFamily) -> usize {
    let (_, rep) = cells.iter().find(|(c, _)| *c == (r, n)).expect("cell computed");
    rep.records.iter().find(|x| x.family == f).expect("family present").rank
}

fn tables(rep: &mut Report) {
    let t = Instant::now();
    let mut cells: Vec<(u32, usize)> = Vec::new();
    for (r, first, d, _, _) in TABLES {
        cells.extend((0..d.len()).map(|i| (*r, first + i)));
    }
    cells.extend(STRETCH.iter().map(|(r, n, ..)| (*r, *n)));
    let computed = compute_cells(&cells);

    for (r, first, d, e, l) in TABLES {
        let last = first + d.len() - 1;
        for (family, expect) in [(RelationFamily::Deriv, d), (RelationFamily::Ext, e), (RelationFamily::Lin, l)] {
            let got: Vec<usize> = (*first..=last).map(|n| rank(&computed, *r, n, family)).collect();
            rep.line(
                got == *expect,
                &format!("table r={r} {} weights {first}..{last}", family.name()),
                format!("expected {} got {}", join(expect), join(&got)),
            );
        }
    }
    for (r, n, d, e, l) in STRETCH {
        let got = [RelationFamily::Deriv, RelationFamily::Ext, RelationFamily::Lin].map(|f| rank(&computed, *r, *n, f));
        rep.line(
            got == [*d, *e, *l],
            &format!("table r={r} weight {n} (stretch cell)"),
            format!("expected {d}/{e}/{l} got {}/{}/{}", got[0], got[1], got[2]),
        );
    }

    let nested = computed.iter().all(|(_, c)| c.deriv_in_ext && c.ext_in_lin);
    let bad: Vec<String> = computed
        .iter()
        .filter(|(_, c)| !(c.deriv_in_ext && c.ext_in_lin))
        .map(|((r, n), _)| format!("r={r} N={n}"))
        .collect();
    rep.line(
        nested,
        "nesting deriv ⊆ ext ⊆ lin",
        format!("{} cells checked by augmented rank{}", computed.len(), if bad.is_empty() { String::new() } else { format!("; failing {}", bad.join(" ")) }),
    );

    for (r, first, counts) in INDEX_SETS {
        let formula: Vec<usize> = (0..counts.len()).map(|i| admissible_count(*r, first + i)).collect();
        // Enumerate explicitly wherever the basis is small.
        let enumerated_ok = (0..counts.len())
            .filter(|i| counts[*i] <= 5_000)
            .all(|i| enumerate_words(first + i, *r, WordClass::A0).len() == counts[i]);
        let basis_ok = computed
            .iter()
            .filter(|((rr, _), _)| rr == r)
            .all(|((_, n), c)| c.records[0].basis_count == admissible_count(*r, *n));
        rep.line(
            formula == *counts && enumerated_ok && basis_ok,
            &format!("index-set counts r={r}"),
            format!("published {} vs r²(r+1)^(N−2) {}", join(counts), join(&formula)),
        );
    }
    println!("     (tables computed in {:.1?})", t.elapsed());
}

fn suites(rep: &mut Report) {
    for suite in Suite::ALL {
        let t = Instant::now();
        let cases = if suite == Suite::Commute { 50 } else { 100 };
        for o in run_suite(suite, cases, SEED) {
            let detail = format!(
                "{}/{} cases{}",
                o.passed,
                o.cases,
                o.note.as_deref().map(|n| format!("; {n}")).unwrap_or_default()
            );
            let name = format!("suite {}/{}", o.suite, o.property);
            if o.gating {
                rep.line(o.all_passed(), &name, detail);
            } else {
                rep.info(o.all_passed(), &name, detail);
            }
        }
        println!("     (suite {} in {:.1?})", suite.name(), t.elapsed());
    }
}

fn word(text: &str) -> NcPoly<Q> {
    NcPoly::from_word(Word::parse(text, LabelDomain::Cyclic(1)).expect("valid index string"))
}

fn numeric(rep: &mut Report) {
    let t = Instant::now();
    let z2 = mlv_numeric(&word("2:0"), MlvKind::Sh, 1_000_000, Accel::Aitken).expect("admissible");
    let exact = PI * PI / 6.0;
    let err = (z2.estimate_re - exact).abs();
    rep.line(err < 1e-5, "numeric zeta(2)", format!("estimate {:.12} |error| {err:.2e} (tolerance 1e-5)", z2.estimate_re));

    // ∂_1(xy) = xyy − xxy: ζ(2,1) = ζ(3).
    let row = &word("2:0,1:0") - &word("3:0");
    let d = mlv_numeric(&row, MlvKind::Sh, 1_000_000, Accel::Aitken).expect("admissible");
    rep.line(d.value().norm() < 1e-4, "numeric zeta(2,1) - zeta(3)", format!("|difference| {:.2e} (tolerance 1e-4)", d.value().norm()));

    for n in 3..=5 {
        let m_max = if n < 5 { 1 << 18 } else { 1 << 20 };
        let res = lin_row_residual(1, n, m_max).expect("lin rows are admissible");
        rep.line(res < 1e-4, &format!("numeric lin rows r=1 N={n}"), format!("max |L(row)| {res:.2e} at M={m_max} (tolerance 1e-4)"));
    }

    // (r, exponent of s, w, w').
    let cases: [(u32, i64, &str, &str); 4] =
        [(1, 0, "1:0", "1:0"), (1, 0, "2:0", "1:0"), (2, 1, "1:1", "1:0"), (2, 0, "1:1", "1:0")];
    for (r, s_exp, w, w2) in cases {
        let dom = LabelDomain::Cyclic(r);
        let parse = |t: &str| NcPoly::from_word(Word::parse(t, dom).expect("valid index string"));
        let s = Label::cyc(s_exp, r);
        let (lhs, rhs, proxy) = quadratic_relation_values(&s, &parse(w), &parse(w2), 1, dom, 1 << 17).expect("admissible");
        let gap = (lhs - rhs).norm();
        rep.line(
            gap < 1e-3,
            &format!("numeric quadratic relation m=1 r={r} s={s} w={w} w'={w2}"),
            format!("lhs {:.6} rhs {:.6} gap {gap:.2e} proxy {proxy:.2e} (tolerance 1e-3)", lhs.re, rhs.re),
        );
    }

    let label_sets: [Vec<Q>; 4] =
        [vec![q(1, 1)], vec![q(1, 2), q(1, 1)], vec![q(1, 1), q(1, 1)], vec![q(-2, 3), q(1, 3), q(1, 1)]];
    for labels in &label_sets {
        let ratios = difference_decay_ratios(labels, 3, 2000);
        let shown: Vec<String> = labels.iter().map(ToString::to_string).collect();
        rep.line(
            ratios.iter().all(|r| *r <= 1.05),
            &format!("numeric decay of differences labels ({})", shown.join(",")),
            format!(
                "sup growth of |Δ^l s(m)|·m^(l+1/2), l=0..3: {} (bound 1.05, m ≤ 2000)",
                ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(" ")
            ),
        );
    }
    println!("     (numeric checks in {:.1?})", t.elapsed());
}

fn main() -> ExitCode {
    let t = Instant::now();
    let mut rep = Report { failures: 0 };
    tables(&mut rep);
    suites(&mut rep);
    numeric(&mut rep);
    println!("{} gating failure(s); total {:.1?}", rep.failures, t.elapsed());
    if rep.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
