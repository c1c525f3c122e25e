use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use spectral_hist::enumeration::verify_theorem;
use spectral_hist::graph6::encode_graph6;
use spectral_hist::spectral::{threshold_side, ExtremalFamily};
use spectral_hist::{
    decode_graph6, enumerate_labeled, find_hist, spectral_radius, Family, PowerOptions, Prescreen,
    ProofTheorem, Source, VerifyOptions,
};

fn spectral(c: &mut Criterion) {
    let opts = PowerOptions::default();
    let mut group = c.benchmark_group("spectral_radius");
    for fam in [Family::L(8), Family::B(8), Family::L(40), Family::Complete(64), Family::Cycle(63)] {
        let g = fam.build().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), &opts).unwrap())
        });
    }
    group.finish();

    let theta = spectral_radius(&ExtremalFamily::B.family(8).build().unwrap(), &opts).unwrap().rho;
    let mut group = c.benchmark_group("threshold_side");
    for fam in [Family::B(8), Family::Complete(8), Family::Cycle(8)] {
        let g = fam.build().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| threshold_side(black_box(g), theta, &opts).unwrap())
        });
    }
    group.finish();
}

fn hist(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_hist");
    for fam in [
        Family::B(8),
        Family::Complete(8),
        Family::Cycle(12),
        Family::CompleteBipartite(3, 30),
        Family::Complete(64),
    ] {
        let g = fam.build().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(fam), &g, |b, g| {
            b.iter(|| find_hist(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn graph6(c: &mut Criterion) {
    let g = Family::CompleteBipartite(31, 31).build().unwrap();
    let s = encode_graph6(&g).unwrap();
    c.bench_function("graph6/decode_62", |b| b.iter(|| decode_graph6(black_box(&s)).unwrap()));
    c.bench_function("graph6/encode_62", |b| b.iter(|| encode_graph6(black_box(&g)).unwrap()));
}

fn scan(c: &mut Criterion) {
    c.bench_function("enumerate_labeled/connected_6", |b| {
        b.iter(|| enumerate_labeled(6, &Prescreen::connected()).unwrap().count())
    });
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("thm1_n7", |b| {
        b.iter(|| {
            verify_theorem(
                ProofTheorem::OneConnected,
                7,
                &Source::LabeledExhaustive,
                &VerifyOptions::default(),
            )
            .unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, spectral, hist, graph6, scan);
criterion_main!(benches);
