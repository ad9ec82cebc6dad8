use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use resgraph_bench::{a_n, d_n, elliptic_tail};
use resgraph_core::lattice::{self, SupportSet};
use resgraph_core::{catalog, classify, elliptic};

fn fundamental_cycle(c: &mut Criterion) {
    let mut group = c.benchmark_group("fundamental_cycle");
    for n in [10, 50, 200] {
        let g = d_n(n);
        group.bench_with_input(BenchmarkId::new("D_n", n), &g, |b, g| {
            b.iter(|| lattice::fundamental_cycle_full(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn canonical_cycle(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_cycle");
    for n in [10, 40, 100] {
        let g = a_n(n);
        group.bench_with_input(BenchmarkId::new("A_n", n), &g, |b, g| {
            b.iter(|| black_box(g).canonical_cycle().unwrap())
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let e8 = catalog::e8();
    let full = SupportSet::full(&e8);
    c.bench_function("oracle_minimal_anti_nef/E8", |b| {
        b.iter(|| lattice::oracle_minimal_anti_nef(black_box(&e8), &full, 2).unwrap())
    });
    let g = catalog::laufer_chain();
    c.bench_function("oracle_chi_nonnegative/laufer-chain", |b| {
        b.iter(|| classify::oracle_chi_nonnegative(black_box(&g), 2).unwrap())
    });
}

fn elliptic_sequence(c: &mut Criterion) {
    let mut group = c.benchmark_group("elliptic_sequence");
    for n in [2, 6, 10] {
        let g = elliptic_tail(n);
        group.bench_with_input(BenchmarkId::new("tail", n), &g, |b, g| {
            b.iter(|| elliptic::elliptic_sequence_full(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    fundamental_cycle,
    canonical_cycle,
    oracles,
    elliptic_sequence
);
criterion_main!(benches);
