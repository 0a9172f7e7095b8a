use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use scottlab_core::order::corpus::{exhaustive, random};
use scottlab_core::property_r::{build_q_lattice, has_property_r, johnstone_r_witness, verify_r_failure};
use scottlab_core::structure::{johnstone_cert, verify_cposet};
use scottlab_core::symbolic::{extract_chain, truncate, AmbientFamily, ColumnId, Enumeration};
use scottlab_core::topo::{derive_topology, is_sober, is_well_filtered, TopologyKind};

fn corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("corpus");
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| exhaustive(n).unwrap().len())
        });
    }
    g.finish();
}

fn topology(c: &mut Criterion) {
    let posets: Vec<_> = random(10, 1).take(16).collect();
    c.bench_function("scott sober+wf, 16 posets of size 10", |b| {
        b.iter(|| {
            posets
                .iter()
                .filter(|p| {
                    let x = derive_topology(p, TopologyKind::Scott);
                    is_sober(&x).unwrap().holds && is_well_filtered(&x).unwrap().holds
                })
                .count()
        })
    });
}

fn property_r(c: &mut Criterion) {
    let posets: Vec<_> = random(8, 2).take(8).collect();
    c.bench_function("property R, 8 posets of size 8", |b| {
        b.iter(|| posets.iter().filter(|p| has_property_r(p).unwrap().holds).count())
    });
    c.bench_function("Q lattice, size 8", |b| {
        b.iter(|| build_q_lattice(black_box(&posets[0])).unwrap().len())
    });
    c.bench_function("R failure witness, s=5 k=12", |b| {
        b.iter(|| verify_r_failure(&johnstone_r_witness(), 5, 12).unwrap().certified)
    });
}

fn symbolic(c: &mut Criterion) {
    let mut g = c.benchmark_group("truncate");
    for f in [AmbientFamily::Johnstone, AmbientFamily::Jia, AmbientFamily::Lattice428] {
        g.bench_function(f.to_string(), |b| b.iter(|| truncate(f, 5).unwrap().len()));
    }
    g.finish();
    c.bench_function("extract chain, 200 steps", |b| {
        let column = ColumnId::Pair(3);
        b.iter(|| {
            extract_chain(
                AmbientFamily::Johnstone,
                Enumeration::stream(move |i| column.elem(i as u32)),
                true,
            )
            .unwrap()
            .take(200)
            .count()
        })
    });
    c.bench_function("verify johnstone cert, depth 8", |b| {
        b.iter(|| verify_cposet(&johnstone_cert(), 8, 5).unwrap().passed)
    });
}

criterion_group!(benches, corpus, topology, property_r, symbolic);
criterion_main!(benches);
