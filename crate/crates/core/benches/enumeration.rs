//! Sequential against rayon for the enumeration hot loops.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fracnet::conditions::{explore_fnc_with, gftc_set_with, ExploreOptions};
use fracnet::exec::Execution;
use fracnet::geometry::{RatVec, Rational};
use fracnet::ifs::{generation_with, IfsSystem};
use fracnet::net::net_intervals_at_with;

fn center_overlap() -> IfsSystem {
    let parts: Vec<_> = [(-1, 1), (-1, -1), (1, -1), (1, 1), (0, 0)]
        .iter()
        .map(|&(x, y)| (Rational::half(), RatVec::from_pairs(&[(x, 4), (y, 4)])))
        .collect();
    IfsSystem::from_scalings(2, &parts).unwrap()
}

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn generation(c: &mut Criterion) {
    let sys = center_overlap();
    let alpha = Rational::new(1, 64);
    let mut group = c.benchmark_group("generation");
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| generation_with(black_box(&sys), &alpha, exec).unwrap())
        });
    }
    group.finish();
}

fn net_intervals(c: &mut Criterion) {
    let sys = center_overlap();
    let alpha = Rational::new(1, 16);
    let mut group = c.benchmark_group("net_intervals");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| net_intervals_at_with(black_box(&sys), &alpha, 4, exec).unwrap())
        });
    }
    group.finish();
}

fn exploration(c: &mut Criterion) {
    let sys = center_overlap();
    let opts = ExploreOptions::default();
    let mut group = c.benchmark_group("explore_fnc");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| explore_fnc_with(black_box(&sys), &opts, exec))
        });
    }
    group.finish();
}

fn gftc(c: &mut Criterion) {
    let sys = center_overlap();
    let alpha = Rational::new(1, 32);
    let mut group = c.benchmark_group("gftc_set");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| gftc_set_with(black_box(&sys), &alpha, None, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, generation, net_intervals, exploration, gftc);
criterion_main!(benches);
