//! End-to-end identity benchmarks at representative verification depths.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qbailey_core::{
    ag_identity_sides, agn_sides, euler_level_n, gamma_from_delta, level_delta_gamma, Grid,
};

fn bench_level_transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("level_transform");
    group.sample_size(20);
    for n in [2i64, 4] {
        let grid = Grid::for_level(n, 60);
        group.bench_function(format!("N{n}_M6_T60"), |bench| {
            bench.iter(|| {
                let fam = level_delta_gamma(n, 6, 1, grid).unwrap();
                black_box(gamma_from_delta(&fam.delta, 1, grid))
            });
        });
    }
    group.finish();
}

fn bench_euler_level(c: &mut Criterion) {
    let mut group = c.benchmark_group("euler_level");
    group.sample_size(20);
    for n in [2i64, 4] {
        let grid = Grid::for_level(n, 100);
        group.bench_function(format!("N{n}_T100"), |bench| {
            bench.iter(|| black_box(euler_level_n(n, grid).unwrap()));
        });
    }
    group.finish();
}

fn bench_andrews_gordon(c: &mut Criterion) {
    let mut group = c.benchmark_group("andrews_gordon");
    group.sample_size(20);
    let grid = Grid::classic(80);
    group.bench_function("classic_k3_T80", |bench| {
        bench.iter(|| black_box(ag_identity_sides(3, 0, grid).unwrap()));
    });
    let grid = Grid::for_level(2, 60);
    group.bench_function("level2_k2_T60", |bench| {
        bench.iter(|| black_box(agn_sides(2, 2, grid).unwrap()));
    });
    group.finish();
}

criterion_group!(benches, bench_level_transform, bench_euler_level, bench_andrews_gordon);
criterion_main!(benches);
