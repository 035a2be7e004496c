use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyparr_core::ffield::{count_complement, count_generic_stratum, count_smooth_points, regular_value_mod_p};
use hyparr_core::fixtures;

fn counts(c: &mut Criterion) {
    let rep4 = fixtures::rep4();
    let k4 = fixtures::k4();
    c.bench_function("complement/k4/q=7", |b| b.iter(|| count_complement(black_box(&k4), 7).unwrap()));
    let lam = regular_value_mod_p(&rep4, 7).unwrap();
    c.bench_function("smooth/rep4/q=7", |b| b.iter(|| count_smooth_points(black_box(&rep4), &lam, 7).unwrap()));
    let mut group = c.benchmark_group("stratum");
    group.sample_size(10);
    group.bench_function("rep4/q=3", |b| b.iter(|| count_generic_stratum(black_box(&rep4), 3).unwrap()));
    group.bench_function("rep4/q=5", |b| b.iter(|| count_generic_stratum(black_box(&rep4), 5).unwrap()));
    group.finish();
}

criterion_group!(benches, counts);
criterion_main!(benches);
