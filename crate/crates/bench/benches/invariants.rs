use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyparr_bench::medium_instances;
use hyparr_core::betti::PoincareReport;
use hyparr_core::fixtures;
use hyparr_core::invariants::{characteristic_polynomial, tutte, tutte_whitney};

fn tutte_polynomials(c: &mut Criterion) {
    let k4 = fixtures::k4();
    c.bench_function("tutte/k4", |b| b.iter(|| tutte(black_box(&k4))));
    c.bench_function("tutte_whitney/k4", |b| b.iter(|| tutte_whitney(black_box(&k4))));
    let medium = medium_instances();
    c.bench_function("tutte/random-medium", |b| b.iter(|| medium.iter().map(tutte).count()));
}

fn moebius(c: &mut Criterion) {
    let k4 = fixtures::k4();
    c.bench_function("charpoly/k4", |b| b.iter(|| characteristic_polynomial(black_box(&k4)).unwrap()));
    c.bench_function("poincare_report/k4", |b| b.iter(|| PoincareReport::compute(black_box(&k4)).unwrap()));
}

criterion_group!(benches, tutte_polynomials, moebius);
criterion_main!(benches);
