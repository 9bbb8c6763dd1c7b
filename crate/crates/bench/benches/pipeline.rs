//! Criterion benchmarks for the hot paths: exact generation, special
//! function kernels, density evaluation, moment quadrature, and Prony
//! extraction.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use selfconv_core::exact::generate_exact;
use selfconv_core::measure::build_measure;
use selfconv_core::moments::moment_quadrature;
use selfconv_core::params::SequenceParams;
use selfconv_core::poles::prony_extract;
use selfconv_core::rational::{parse_rational, Rat};
use selfconv_core::specfun::{airy_pair, bessel_ik, u_branch_values};

fn params(s: &str) -> SequenceParams {
    let parts: Vec<Rat> = s.split(',').map(|t| parse_rational(t).unwrap()).collect();
    SequenceParams::new(parts[0].clone(), parts[1].clone(), parts[2].clone()).unwrap()
}

fn bench_exact(c: &mut Criterion) {
    let p = params("6,-8,1");
    c.bench_function("generate_exact N=100", |b| {
        b.iter(|| generate_exact(black_box(&p), 100))
    });
}

fn bench_kernels(c: &mut Criterion) {
    c.bench_function("airy_pair series x=5", |b| b.iter(|| airy_pair(black_box(5.0))));
    c.bench_function("airy_pair asymptotic x=15", |b| b.iter(|| airy_pair(black_box(15.0))));
    c.bench_function("bessel_ik nu=1/3 x=4", |b| {
        b.iter(|| bessel_ik(black_box(1.0 / 3.0), black_box(4.0)))
    });
    c.bench_function("u_branch generic a=1/2 b=1/4 x=6", |b| {
        b.iter(|| u_branch_values(black_box(0.5), black_box(0.25), black_box(6.0)))
    });
    c.bench_function("u_branch integer-b perturbation x=6", |b| {
        b.iter(|| u_branch_values(black_box(0.75), black_box(1.0), black_box(6.0)))
    });
}

fn bench_density(c: &mut Criterion) {
    let airy = build_measure(&params("6,-8,1")).unwrap();
    c.bench_function("airy density eval", |b| {
        b.iter(|| airy.measure.density_at(black_box(7.0)))
    });
    let s221 = build_measure(&params("2,-2,1")).unwrap();
    c.bench_function("s221 dd-series density eval", |b| {
        b.iter(|| s221.measure.density_at(black_box(7.0)))
    });
}

fn bench_moments(c: &mut Criterion) {
    let airy = build_measure(&params("6,-8,1")).unwrap();
    c.bench_function("airy moment n=6 tol 1e-8", |b| {
        b.iter(|| moment_quadrature(&airy.measure, black_box(6), 1e-8).unwrap())
    });
}

fn bench_prony(c: &mut Criterion) {
    let p = params("1,2,-3/2");
    c.bench_function("prony_extract order 2", |b| {
        b.iter(|| prony_extract(black_box(&p), 2, 6, 1e-8).unwrap())
    });
}

criterion_group!(
    benches,
    bench_exact,
    bench_kernels,
    bench_density,
    bench_moments,
    bench_prony
);
criterion_main!(benches);
