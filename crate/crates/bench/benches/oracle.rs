use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sbo_bench::sample_alpha;
use sbo_core::exact::int;
use sbo_core::measures::{AlphaMode, MeasureSpec};
use sbo_core::oracle::{oracle_families_symbolic, oracle_family};

fn oracle(c: &mut Criterion) {
    let hermite = MeasureSpec::hermite(int(2)).expect("valid spec");
    let numeric =
        MeasureSpec::laguerre(int(2), AlphaMode::numeric(sample_alpha()).expect("admissible")).expect("valid spec");
    let symbolic = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).expect("valid spec");
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("hermite i=2 n<=14", |b| {
        b.iter(|| oracle_family(&hermite, black_box(2), 14))
    });
    g.bench_function("laguerre alpha=1/2 i=2 n<=12", |b| {
        b.iter(|| oracle_family(&numeric, black_box(2), 12))
    });
    g.bench_function("laguerre symbolic i<=2 n<=6", |b| {
        b.iter(|| oracle_families_symbolic(&symbolic, black_box(&[0, 1, 2]), 6))
    });
    g.finish();
}

criterion_group!(benches, oracle);
criterion_main!(benches);
