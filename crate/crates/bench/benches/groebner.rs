use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyparr_core::circuit_rings::{buchberger, circuit_ideal, r0_hilbert, OrderKind, TermOrder};
use hyparr_core::fixtures;

fn groebner(c: &mut Criterion) {
    let k4 = fixtures::k4();
    let gens = circuit_ideal(&k4);
    for kind in [OrderKind::Lex, OrderKind::Grevlex] {
        let order = TermOrder::identity(kind, k4.n());
        c.bench_function(&format!("buchberger/k4/{kind:?}"), |b| b.iter(|| buchberger(black_box(&gens), &order)));
    }
    let nu4 = fixtures::nu4();
    let nu4_gens = circuit_ideal(&nu4);
    let lex = TermOrder::identity(OrderKind::Lex, 4);
    c.bench_function("buchberger/nu4/lex", |b| b.iter(|| buchberger(black_box(&nu4_gens), &lex)));
    c.bench_function("r0_hilbert/k4", |b| b.iter(|| r0_hilbert(black_box(&k4)).unwrap()));
}

criterion_group!(benches, groebner);
criterion_main!(benches);
