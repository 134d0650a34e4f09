use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use charvar::algebra::shorthand::{c, u, v};
use charvar::invariants;
use charvar::sweep::{map_genera_parallel, map_genera_sequential};
use charvar::Group;

fn genus_sweep(crit: &mut Criterion) {
    let mut group = crit.benchmark_group("ip_sweep");
    group.sample_size(10);
    for top in [6u32, 10] {
        let work = |g: u32| invariants::ip(Group::SL2, g).unwrap().poly.len();
        group.bench_with_input(BenchmarkId::new("sequential", top), &top, |b, &top| {
            b.iter(|| map_genera_sequential(2..=black_box(top), work))
        });
        group.bench_with_input(BenchmarkId::new("parallel", top), &top, |b, &top| {
            b.iter(|| map_genera_parallel(2..=black_box(top), work))
        });
    }
    group.finish();
}

fn laurent_product(crit: &mut Criterion) {
    let mut group = crit.benchmark_group("laurent_mul");
    for n in [8u32, 16] {
        let a = (c(1) + u(1) + v(1)).pow(n);
        let b = (c(1) - u(1) * v(1)).pow(n / 2) * (c(2) + u(2) - v(1)).pow(n / 2);
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |bch, _| {
            bch.iter(|| black_box(&a).mul_sequential(black_box(&b)))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |bch, _| {
            bch.iter(|| black_box(&a).mul_parallel(black_box(&b)))
        });
    }
    group.finish();
}

criterion_group!(benches, genus_sweep, laurent_product);
criterion_main!(benches);
