use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use projcross_core::rational::rational_from_ints;
use projcross_core::{f_eval, minimize_f, pcr_exact, Params};

fn bench_pcr_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("pcr_exact");
    for k in [10u32, 1_000, 100_000] {
        let p = Params::new(k, k, k).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(k), &p, |b, p| {
            b.iter(|| pcr_exact(black_box(p)))
        });
    }
    group.finish();
}

fn bench_f_eval(c: &mut Criterion) {
    let alpha = rational_from_ints(11, 10);
    let beta = rational_from_ints(1, 1);
    c.bench_function("f_eval_witness", |b| {
        b.iter(|| f_eval(black_box(&alpha), black_box(&beta)).unwrap())
    });
}

fn bench_minimize(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize_f");
    group.sample_size(10);
    let step = rational_from_ints(1, 4);
    group.bench_function("quarter_grid_10_rounds", |b| {
        b.iter(|| minimize_f(black_box(&step), 10))
    });
    group.finish();
}

criterion_group!(benches, bench_pcr_exact, bench_f_eval, bench_minimize);
criterion_main!(benches);
