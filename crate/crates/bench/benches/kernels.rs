//! Series-kernel benchmarks: the dense convolution, inversion, and
//! Pochhammer construction that dominate every identity check.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use qbailey_core::{pochhammer, Grid, Order, QPower, QSeries};

fn partition_gf(grid: Grid) -> QSeries {
    pochhammer(&QPower::q_power(1), Order::Infinite, grid)
        .unwrap()
        .invert()
        .unwrap()
}

fn bench_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for trunc in [100i64, 200, 400] {
        let grid = Grid::integer(trunc);
        let a = partition_gf(grid);
        let b = pochhammer(&QPower::new(-1, 1, 1), Order::Infinite, grid).unwrap();
        group.bench_function(format!("dense_T{trunc}"), |bench| {
            bench.iter(|| black_box(a.mul(&b)));
        });
    }
    // Fractional grid with mostly-empty slots, the level-N layout.
    let grid = Grid::for_level(4, 100);
    let a = partition_gf(grid);
    let b = pochhammer(&QPower::new(-1, 1, 1), Order::Infinite, grid).unwrap();
    group.bench_function("sparse_grid_level4_T100", |bench| {
        bench.iter(|| black_box(a.mul(&b)));
    });
    group.finish();
}

fn bench_invert(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert");
    for trunc in [100i64, 200, 400] {
        let grid = Grid::integer(trunc);
        let p = pochhammer(&QPower::q_power(1), Order::Infinite, grid).unwrap();
        group.bench_function(format!("euler_product_T{trunc}"), |bench| {
            bench.iter_batched(|| p.clone(), |p| black_box(p.invert().unwrap()), BatchSize::SmallInput);
        });
    }
    group.finish();
}

fn bench_pochhammer(c: &mut Criterion) {
    let grid = Grid::integer(200);
    c.bench_function("pochhammer_infinite_T200", |bench| {
        bench.iter(|| black_box(pochhammer(&QPower::q_power(1), Order::Infinite, grid).unwrap()));
    });
}

criterion_group!(benches, bench_mul, bench_invert, bench_pochhammer);
criterion_main!(benches);
