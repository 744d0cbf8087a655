use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qloci::factorization::x_omega;
use qloci::formulas::{kpoly_component, kpoly_pipe, multidegree_component, multidegree_pipe, snake_dreams};
use qloci::lacing::{enum_kw, enum_w};
use qloci::pipes::DEFAULT_MAX_FREE_CELLS;
use qloci::quiver::zelevinsky;
use qloci_bench::instances;

fn pipes(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipes");
    for (name, q, o) in instances() {
        g.bench_with_input(BenchmarkId::new("zelevinsky", name), &(), |b, _| b.iter(|| zelevinsky(&q, &o)));
        g.bench_with_input(BenchmarkId::new("rpipes", name), &(), |b, _| {
            b.iter(|| snake_dreams(&q, &o, true, DEFAULT_MAX_FREE_CELLS))
        });
        g.bench_with_input(BenchmarkId::new("pipes", name), &(), |b, _| {
            b.iter(|| snake_dreams(&q, &o, false, DEFAULT_MAX_FREE_CELLS))
        });
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariants");
    g.sample_size(20);
    for (name, q, o) in instances() {
        g.bench_with_input(BenchmarkId::new("multidegree_pipe", name), &(), |b, _| {
            b.iter(|| multidegree_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS))
        });
        g.bench_with_input(BenchmarkId::new("multidegree_component", name), &(), |b, _| {
            b.iter(|| multidegree_component(&q, &o))
        });
        g.bench_with_input(BenchmarkId::new("kpoly_pipe", name), &(), |b, _| {
            b.iter(|| kpoly_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS))
        });
        g.bench_with_input(BenchmarkId::new("kpoly_component", name), &(), |b, _| {
            b.iter(|| kpoly_component(&q, &o, DEFAULT_MAX_FREE_CELLS))
        });
    }
    g.finish();
}

fn lacing(c: &mut Criterion) {
    let mut g = c.benchmark_group("lacing");
    g.sample_size(20);
    for (name, q, o) in instances() {
        g.bench_with_input(BenchmarkId::new("enum_w", name), &(), |b, _| b.iter(|| enum_w(&q, &o)));
        g.bench_with_input(BenchmarkId::new("enum_kw", name), &(), |b, _| b.iter(|| enum_kw(&q, &o)));
        g.bench_with_input(BenchmarkId::new("x_omega", name), &(), |b, _| b.iter(|| x_omega(&q, &o)));
    }
    g.finish();
}

criterion_group!(benches, pipes, invariants, lacing);
criterion_main!(benches);
