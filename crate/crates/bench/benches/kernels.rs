use std::hint::black_box;

use bertini_bench::sampled_pencil;
use bertini_core::verify::{run_check, Mode, Options};
use bertini_core::{build_bundle, PencilSpec};
use criterion::{criterion_group, criterion_main, Criterion};

fn ring(c: &mut Criterion) {
    let bundle = build_bundle(&sampled_pencil(1)).unwrap();
    c.bench_function("mul phi6*psi6 mod p", |b| b.iter(|| black_box(&bundle.phi6) * black_box(&bundle.psi6)));
    let generic = PencilSpec::generic();
    let (w, wp) = (generic.w(), generic.wp());
    c.bench_function("mul w*wp generic", |b| b.iter(|| black_box(&w) * black_box(&wp)));
}

fn bundles(c: &mut Criterion) {
    let spec = sampled_pencil(2);
    c.bench_function("bundle mod p", |b| b.iter(|| build_bundle(black_box(&spec)).unwrap()));
    let mut group = c.benchmark_group("symbolic");
    group.sample_size(10);
    group.bench_function("bundle generic", |b| b.iter(|| build_bundle(&PencilSpec::generic()).unwrap()));
    group.finish();
}

fn modular(c: &mut Criterion) {
    let opts = Options { mode: Mode::Modular, trials: 1, ..Options::default() };
    c.bench_function("w3_of_z one trial", |b| b.iter(|| run_check("w3_of_z", &opts).unwrap()));
}

criterion_group!(benches, ring, bundles, modular);
criterion_main!(benches);
