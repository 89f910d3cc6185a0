//! Every property suite passes under a seed different from the acceptance run.

use mlv_core::suites::{run_suite, Suite};

fn run(suite: Suite, cases: usize) {
    let t = std::time::Instant::now();
    let out = run_suite(suite, cases, 7);
    for o in &out {
        println!(
            "{:>9} {:<55} {:>3}/{:<3} {} {}",
            o.suite,
            o.property,
            o.passed,
            o.cases,
            if o.gating { "gating" } else { "info" },
            o.note.clone().unwrap_or_default()
        );
    }
    println!("{} took {:?}", suite.name(), t.elapsed());
    let bad: Vec<_> = out.iter().filter(|o| !o.ok()).map(|o| o.property).collect();
    assert!(bad.is_empty(), "failing properties: {bad:?}");
}

#[test]
fn inversion() {
    run(Suite::Inversion, 20);
}

#[test]
fn landen() {
    run(Suite::Landen, 20);
}

#[test]
fn products() {
    run(Suite::Products, 20);
}

#[test]
fn homs() {
    run(Suite::Homs, 20);
}

#[test]
fn commute() {
    run(Suite::Commute, 10);
}

#[test]
fn tower() {
    run(Suite::Tower, 15);
}

#[test]
fn newton() {
    run(Suite::Newton, 20);
}
