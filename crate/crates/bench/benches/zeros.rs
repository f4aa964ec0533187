use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sbo_bench::sample_alpha;
use sbo_core::zeros::{isolate_roots, SturmChain};
use sbo_core::{sbo_hermite, sbo_laguerre};

fn zeros(c: &mut Criterion) {
    let h = sbo_hermite::sbo(2, 16).expect("valid indices");
    let l = sbo_laguerre::sbo(2, 12, &sample_alpha()).expect("valid indices");
    let mut g = c.benchmark_group("zeros");
    g.bench_function("sturm chain hermite-sbo i=2 n=16", |b| {
        b.iter(|| SturmChain::new(black_box(&h)))
    });
    g.bench_function("isolate hermite-sbo i=2 n=16", |b| {
        b.iter(|| isolate_roots(black_box(&h)))
    });
    g.bench_function("isolate laguerre-sbo alpha=1/2 i=2 n=12", |b| {
        b.iter(|| isolate_roots(black_box(&l)))
    });
    g.finish();
}

criterion_group!(benches, zeros);
criterion_main!(benches);
