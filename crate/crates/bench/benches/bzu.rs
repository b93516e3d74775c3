use bzu_core::analysis::{analyze, find_k33, planarity_bipartite};
use bzu_core::census::{analyze_ring, run_census, CensusOptions};
use bzu_core::graph::build_graph;
use bzu_core::symmetry::{canonical_form, graph_aut};
use bzu_core::{Ring, RingSpec};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

const RINGS: [&str; 4] = ["Z/30", "GF(4) x GF(8)", "GF(3)^3 x GF(2)", "GF(2)[t]/(t^3) x GF(7)"];

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for text in RINGS {
        let ring = Ring::parse(text).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(text), &ring, |b, r| b.iter(|| build_graph(black_box(r))));
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph");
    for text in RINGS {
        let g = build_graph(&Ring::parse(text).unwrap()).graph;
        group.bench_with_input(BenchmarkId::new("analyze", text), &g, |b, g| b.iter(|| analyze(black_box(g))));
        group.bench_with_input(BenchmarkId::new("k33", text), &g, |b, g| b.iter(|| find_k33(black_box(g))));
        group.bench_with_input(BenchmarkId::new("planarity", text), &g, |b, g| {
            b.iter(|| planarity_bipartite(black_box(g)))
        });
    }
    group.finish();
}

fn symmetry(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetry");
    for text in RINGS {
        let g = build_graph(&Ring::parse(text).unwrap()).graph;
        let s = g.to_simple();
        group.bench_with_input(BenchmarkId::new("graph_aut", text), &g, |b, g| b.iter(|| graph_aut(black_box(g))));
        group.bench_with_input(BenchmarkId::new("canonical_form", text), &s, |b, s| {
            b.iter(|| canonical_form(black_box(s)))
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    let spec = RingSpec::parse("GF(2) x GF(3) x GF(5)").unwrap();
    group.bench_function("analyze_ring GF(2) x GF(3) x GF(5)", |b| b.iter(|| analyze_ring(black_box(&spec))));
    let opts = CensusOptions {
        reduced_max: 48,
        nonreduced_max: 32,
        ..CensusOptions::default()
    };
    group.bench_function("run_census 48", |b| b.iter(|| run_census(black_box(&opts))));
    group.finish();
}

criterion_group!(benches, construction, invariants, symmetry, census);
criterion_main!(benches);
