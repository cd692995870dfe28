use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tiltwall::threefold::{context, NamedClass};
use tiltwall::{
    find_ku_destabilizers, find_tilt_walls, solve_cone_system, ConePreset, SearchOptions,
};
use tiltwall_bench::{destab_inputs, wall_scan_inputs};

fn euler_pairing(c: &mut Criterion) {
    let ctx = context(9, None).unwrap();
    let sky = ctx.named_class(NamedClass::SkyscraperProjection).unwrap();
    let e = ctx.named_class(NamedClass::E).unwrap();
    c.bench_function("euler_pairing", |b| {
        b.iter(|| ctx.euler(black_box(&sky), black_box(&e)))
    });
}

fn wall_scan(c: &mut Criterion) {
    let (ctx, target, beta) = wall_scan_inputs();
    let options = SearchOptions::default();
    c.bench_function("wall_scan_genus7", |b| {
        b.iter(|| find_tilt_walls(black_box(&target), black_box(&beta), &ctx, &options).unwrap())
    });
}

fn destabilizer_scan(c: &mut Criterion) {
    let (ctx, target, point, budget) = destab_inputs();
    let options = SearchOptions::default();
    c.bench_function("destabilizer_scan_genus8", |b| {
        b.iter(|| {
            find_ku_destabilizers(black_box(&target), &ctx, &point, budget, &options).unwrap()
        })
    });
}

fn cone_system(c: &mut Criterion) {
    let ctx = context(7, None).unwrap();
    c.bench_function("cone_system_genus7", |b| {
        b.iter(|| solve_cone_system(black_box(ConePreset::A8), &ctx).unwrap())
    });
}

criterion_group!(benches, euler_pairing, wall_scan, destabilizer_scan, cone_system);
criterion_main!(benches);
