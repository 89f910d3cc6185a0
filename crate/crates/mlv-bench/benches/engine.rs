use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use mlv_bench::{rational_word, word, PRODUCT_INPUTS};
use mlv_core::hproducts::{hprod, HarmonicKind};
use mlv_core::relations::{generate, RelationFamily};
use mlv_core::seqnum::{mlv_numeric, newton_eval, Accel, MlvKind, NewtonAccel, NewtonKind};

fn harmonic_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("harmonic_product");
    for (label, a, b) in PRODUCT_INPUTS {
        let (p, q) = (word(a, 2), word(b, 2));
        for kind in [HarmonicKind::Star, HarmonicKind::DotStar] {
            group.bench_with_input(BenchmarkId::new(format!("{kind:?}"), label), &(&p, &q), |bench, (p, q)| {
                bench.iter(|| hprod(kind, p, q).unwrap());
            });
        }
    }
    group.finish();
}

fn relation_ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("relation_rank");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(10));
    for (r, n) in [(1u32, 8usize), (2, 5), (3, 4)] {
        for family in RelationFamily::ALL {
            group.bench_function(BenchmarkId::new(family.name(), format!("r{r}_w{n}")), |bench| {
                bench.iter(|| generate(family, r, n).unwrap().rank());
            });
        }
    }
    group.finish();
}

fn numerics(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric");
    group.sample_size(10);
    let z21 = word("2:0,1:0", 1);
    group.bench_function("zeta_2_1_m1e5_aitken", |bench| {
        bench.iter(|| mlv_numeric(&z21, MlvKind::Sh, 100_000, Accel::Aitken).unwrap());
    });
    let y = rational_word("1:1/2,1:1");
    group.bench_function("newton_2000_terms", |bench| {
        bench.iter(|| newton_eval(&y, NewtonKind::Pinned, Complex64::new(-0.5, 0.0), 2000, NewtonAccel::Aitken).unwrap());
    });
    group.finish();
}

criterion_group!(benches, harmonic_products, relation_ranks, numerics);
criterion_main!(benches);
