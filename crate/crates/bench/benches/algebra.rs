use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ncframe_core::{
    build_pfn_algebra, enumerate_instances, implication_t, is_nc_frame, run_all,
    validate_skew_lattice, CorpusSpec, SkewLattice, VerifyConfig,
};

fn construction(c: &mut Criterion) {
    c.bench_function("build P(4)", |b| {
        b.iter(|| build_pfn_algebra(black_box(4)).unwrap())
    });
    let p3 = build_pfn_algebra(3).unwrap();
    c.bench_function("validate P(3)", |b| {
        b.iter(|| validate_skew_lattice(black_box(&p3)))
    });
    c.bench_function("orders and D-classes of P(3)", |b| {
        b.iter(|| SkewLattice::new(black_box(&p3)).unwrap())
    });
}

fn implication(c: &mut Criterion) {
    let p3 = build_pfn_algebra(3).unwrap();
    c.bench_function("implication_t on P(3)", |b| {
        b.iter(|| implication_t(&p3, black_box(26)).unwrap())
    });
    let sl = SkewLattice::new(&p3).unwrap();
    c.bench_function("is_nc_frame P(3) cap 12", |b| {
        b.iter(|| is_nc_frame(&sl, Some(12)))
    });
}

fn harness(c: &mut Criterion) {
    let corpus = enumerate_instances(&CorpusSpec::default_corpus());
    let config = VerifyConfig {
        cap: Some(12),
        parallel: true,
    };
    let mut group = c.benchmark_group("harness");
    group.sample_size(10);
    group.bench_function("run_all default corpus", |b| {
        b.iter(|| run_all(&corpus, &config))
    });
    group.finish();
}

criterion_group!(benches, construction, implication, harness);
criterion_main!(benches);
