use axetlab_bench::{dense_element, fixture, RATIONAL_FIXTURES};
use axetlab_core::axes::{miyamoto, verify_axis};
use axetlab_core::axets::{realize_axet, DEFAULT_MAX_POINTS};
use axetlab_core::skewverify::{check_bracket_table, check_eigenvectors_generic, GenericContext};
use axetlab_core::suite::{run_criterion, CharFilter};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("mul");
    for name in RATIONAL_FIXTURES {
        let f = fixture(name);
        let x = dense_element(&f);
        g.bench_with_input(BenchmarkId::from_parameter(name), &x, |b, x| {
            b.iter(|| f.algebra.mul(black_box(x), black_box(x)))
        });
    }
    g.finish();
}

fn axes(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_axis");
    for name in RATIONAL_FIXTURES {
        let f = fixture(name);
        let (axis, law) = f.generators().unwrap().remove(0);
        g.bench_function(name, |b| b.iter(|| verify_axis(&f.algebra, black_box(&axis), &law)));
    }
    g.finish();

    let f = fixture("Q2-skew");
    let (axis, law) = f.generators().unwrap().remove(0);
    c.bench_function("miyamoto/Q2-skew", |b| {
        b.iter(|| miyamoto(&f.algebra, black_box(&axis), &law, None).unwrap())
    });
}

fn axets(c: &mut Criterion) {
    let mut g = c.benchmark_group("realize_axet");
    for name in ["3C-skew", "Q2", "Q2-skew"] {
        let f = fixture(name);
        let gens = f.generators().unwrap();
        g.bench_function(name, |b| {
            b.iter(|| realize_axet(&f.algebra, black_box(&gens), DEFAULT_MAX_POINTS).unwrap())
        });
    }
    g.finish();
}

fn generic(c: &mut Criterion) {
    let ctx = GenericContext::new().unwrap();
    let mut g = c.benchmark_group("generic");
    g.sample_size(10);
    g.bench_function("eigenvectors", |b| b.iter(|| check_eigenvectors_generic(black_box(&ctx))));
    g.bench_function("bracket_table", |b| b.iter(|| check_bracket_table(black_box(&ctx)).unwrap()));
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("criterion");
    g.sample_size(10);
    for n in [1u8, 3, 9] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| run_criterion(n, CharFilter::All))
        });
    }
    g.finish();
}

criterion_group!(benches, products, axes, axets, generic, suite);
criterion_main!(benches);
