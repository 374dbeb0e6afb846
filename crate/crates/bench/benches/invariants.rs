use std::hint::black_box;

use altwrithe_bench::{corpus_diagrams, graphs};
use altwrithe_core::flips::random_flip_walk;
use altwrithe_core::rational::RationalLink;
use altwrithe_core::{fixtures, graph_profile, parse_pd, profile};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn diagram_profiles(c: &mut Criterion) {
    let d1 = parse_pd(fixtures::EXAMPLE_D1).unwrap();
    c.bench_function("profile/example_d1", |b| b.iter(|| profile(black_box(&d1))));
    let all = corpus_diagrams();
    c.bench_function("profile/corpus", |b| {
        b.iter(|| {
            for d in &all {
                black_box(profile(d).unwrap());
            }
        })
    });
    c.bench_function("parse_pd/example_d1", |b| {
        b.iter(|| parse_pd(black_box(fixtures::EXAMPLE_D1)))
    });
}

fn graph_profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_profile");
    for n in [8, 14, 20] {
        let gs = graphs(n, 20, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &gs, |b, gs| {
            b.iter(|| {
                for g in gs {
                    black_box(graph_profile(g).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn flip_walks(c: &mut Criterion) {
    let gs = graphs(20, 10, 2);
    c.bench_function("flip_walk/20_vertices_50_steps", |b| {
        b.iter(|| {
            for (i, g) in gs.iter().enumerate() {
                black_box(random_flip_walk(g, 50, i as u64).unwrap());
            }
        })
    });
}

fn rational_links(c: &mut Criterion) {
    c.bench_function("rational/278_641", |b| {
        b.iter(|| RationalLink::new(black_box(278), black_box(641)).unwrap())
    });
}

criterion_group!(
    benches,
    diagram_profiles,
    graph_profiles,
    flip_walks,
    rational_links
);
criterion_main!(benches);
