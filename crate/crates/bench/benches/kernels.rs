use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ensembles::combinat::partitions_of;
use ensembles::kernels::{discrete_sine_kernel, window, DiscreteBessel};
use ensembles::measures::{schur_value, zmeasure_weight, Specialization, ZParams};
use ensembles::verify::{run_suite, RunOptions, Suite};
use ensembles::HalfInt;

fn bessel(c: &mut Criterion) {
    let k = DiscreteBessel::new(100.0, 40).unwrap();
    let sites = window(6);
    c.bench_function("bessel kernel 12x12 window nu=100", |b| {
        b.iter(|| sites.iter().flat_map(|&x| sites.iter().map(move |&y| (x, y))).map(|(x, y)| k.eval(x, y).unwrap()).sum::<f64>())
    });
    c.bench_function("bessel correlation 4 points", |b| {
        let xs: Vec<HalfInt> = sites[4..8].to_vec();
        b.iter(|| k.correlation(black_box(&xs)).unwrap())
    });
    c.bench_function("sine kernel", |b| b.iter(|| discrete_sine_kernel(black_box(3), black_box(-2), 0.7).unwrap()));
}

fn weights(c: &mut Criterion) {
    let p = ZParams::real(1.5, 2.5);
    let ls = partitions_of(20);
    c.bench_function("z-measure over partitions of 20", |b| b.iter(|| ls.iter().map(|l| zmeasure_weight(l, &p).unwrap()).sum::<f64>()));
    let phi = Specialization::ZSeries { z: 1.5, xi: 0.3 };
    let l = &ls[ls.len() / 2];
    c.bench_function("jacobi-trudi schur value", |b| b.iter(|| schur_value(black_box(l), &phi).unwrap()));
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for s in [Suite::EwensExact, Suite::Determinantal, Suite::SchurVsZ] {
        g.bench_function(s.name(), |b| b.iter(|| run_suite(s, RunOptions::seeded(1)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, bessel, weights, suites);
criterion_main!(benches);
