use criterion::{black_box, criterion_group, criterion_main, Criterion};

use spined_core::construction::{build_spined_product, decompose_and_rebuild, extract_star};
use spined_core::families::{brandt_b2, full_transformation_monoid, rectangular_band};
use spined_core::search::search_transversals;
use spined_core::suite::corpus_run;
use spined_core::{analyze_transversal, r_star, ElementSubset};

fn relations(c: &mut Criterion) {
    let t3 = full_transformation_monoid(3).unwrap();
    c.bench_function("r_star on T3", |b| b.iter(|| r_star(black_box(&t3))));
}

fn transversals(c: &mut Criterion) {
    let b2b2 = brandt_b2().direct_product(&brandt_b2());
    let full = ElementSubset::full(b2b2.order());
    c.bench_function("analyze_transversal on B2xB2", |b| b.iter(|| analyze_transversal(black_box(&b2b2), &full).unwrap()));
    let rect = rectangular_band(4, 4).unwrap();
    c.bench_function("search_transversals on 4x4 band", |b| b.iter(|| search_transversals(black_box(&rect), 2).unwrap()));
}

fn constructions(c: &mut Criterion) {
    let b2b2 = brandt_b2().direct_product(&brandt_b2());
    let a = analyze_transversal(&b2b2, &ElementSubset::full(b2b2.order())).unwrap();
    let sm = extract_star(&a).unwrap();
    c.bench_function("build_spined_product on B2xB2", |b| b.iter(|| build_spined_product(black_box(&sm)).unwrap()));
    c.bench_function("decompose_and_rebuild on B2xB2", |b| b.iter(|| decompose_and_rebuild(black_box(&a)).unwrap()));
}

fn corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("corpus");
    g.sample_size(10);
    g.bench_function("corpus_run", |b| b.iter(|| corpus_run(2)));
    g.finish();
}

criterion_group!(benches, relations, transversals, constructions, corpus);
criterion_main!(benches);
