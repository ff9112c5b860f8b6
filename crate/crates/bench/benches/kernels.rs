use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use setinc_bench::bench_params;
use setinc_core::automorphisms::{brute_force_aut_order, DEFAULT_BRUTE_FORCE_CAP};
use setinc_core::combinatorics::beta;
use setinc_core::spectra::{eigensolver_oracle, DEFAULT_EIGEN_CAP};
use setinc_core::{build_inclusion_graph, build_line_graph, spectrum_inclusion, spectrum_line_inclusion, GraphParams};

fn closed_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form");
    for (n, k, l) in [(20, 5, 9), (60, 20, 30), (64, 31, 33)] {
        let p = GraphParams::new(n, k, l).unwrap();
        group.bench_with_input(BenchmarkId::new("beta_all_s", p), &p, |b, p| {
            b.iter(|| (0..=p.k()).map(|s| beta(black_box(p), s).unwrap()).collect::<Vec<_>>())
        });
        group.bench_with_input(BenchmarkId::new("spectrum", p), &p, |b, p| {
            b.iter(|| spectrum_inclusion(black_box(p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("line_spectrum", p), &p, |b, p| {
            b.iter(|| spectrum_line_inclusion(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for p in bench_params() {
        group.bench_with_input(BenchmarkId::new("inclusion_graph", p), &p, |b, p| {
            b.iter(|| build_inclusion_graph(black_box(*p)).unwrap())
        });
        let g = build_inclusion_graph(p).unwrap();
        group.bench_with_input(BenchmarkId::new("line_graph", p), g.graph(), |b, g| {
            b.iter(|| build_line_graph(black_box(g)))
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    group.sample_size(10);
    for p in bench_params().into_iter().take(2) {
        let m = build_inclusion_graph(p).unwrap().graph().adjacency_matrix();
        group.bench_with_input(BenchmarkId::new("jacobi", p), &m, |b, m| {
            b.iter(|| eigensolver_oracle(black_box(m), DEFAULT_EIGEN_CAP).unwrap())
        });
    }
    group.finish();
}

fn automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphisms");
    group.sample_size(10);
    for (n, k, l) in [(5, 2, 3), (6, 2, 3), (20, 1, 19)] {
        let p = GraphParams::new(n, k, l).unwrap();
        let g = build_inclusion_graph(p).unwrap();
        group.bench_with_input(BenchmarkId::new("brute_force_order", p), g.graph(), |b, g| {
            b.iter(|| brute_force_aut_order(black_box(g), DEFAULT_BRUTE_FORCE_CAP).unwrap())
        });
    }
    group.finish();
}

criterion_group!(kernels, closed_forms, construction, eigensolver, automorphisms);
criterion_main!(kernels);
