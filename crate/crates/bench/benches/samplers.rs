use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ensembles::ewens::{sample_ewens, EwensParams};
use ensembles::measures::{last_passage_time, rsk_knuth, sample_geometric_matrix};
use ensembles::pdirichlet::{sample_pd, PdMethod};
use ensembles::plancherel::{rsk, sample_plancherel, sup_distance_to_omega, PlancherelSampler};
use ensembles::rng::substream;

fn ewens(c: &mut Criterion) {
    let params = EwensParams::new(1.5).unwrap();
    let mut rng = substream(1, "bench", 0);
    c.bench_function("ewens n=10000", |b| b.iter(|| sample_ewens(10_000, params, &mut rng)));
}

fn poisson_dirichlet(c: &mut Criterion) {
    let mut g = c.benchmark_group("pd theta=1 k=10");
    for m in [PdMethod::Stick, PdMethod::Dirichlet, PdMethod::Poisson] {
        let mut rng = substream(2, "bench", 0);
        g.bench_function(format!("{m:?}"), |b| b.iter(|| sample_pd(m, 1.0, 10, &mut rng).unwrap()));
    }
    g.finish();
}

fn plancherel(c: &mut Criterion) {
    let mut g = c.benchmark_group("plancherel");
    g.sample_size(20);
    for n in [100usize, 1000] {
        for s in [PlancherelSampler::Rsk, PlancherelSampler::Hookwalk] {
            let mut rng = substream(3, "bench", 0);
            g.bench_with_input(BenchmarkId::new(format!("{s:?}"), n), &n, |b, &n| b.iter(|| sample_plancherel(s, n, &mut rng)));
        }
    }
    g.finish();
}

fn tableaux(c: &mut Criterion) {
    let mut rng = substream(4, "bench", 0);
    let s = sample_ewens(5000, EwensParams::new(1.0).unwrap(), &mut rng);
    c.bench_function("rsk n=5000", |b| b.iter(|| rsk(black_box(&s))));
    let l = sample_plancherel(PlancherelSampler::Rsk, 5000, &mut rng);
    c.bench_function("sup distance n=5000", |b| b.iter(|| sup_distance_to_omega(black_box(&l)).unwrap()));
}

fn percolation(c: &mut Criterion) {
    let mut rng = substream(5, "bench", 0);
    let m = sample_geometric_matrix(50, 50, 0.5, &mut rng).unwrap();
    c.bench_function("lpp 50x50", |b| b.iter(|| last_passage_time(black_box(&m))));
    c.bench_function("rsk-knuth 50x50", |b| b.iter(|| rsk_knuth(black_box(&m))));
}

criterion_group!(benches, ewens, poisson_dirichlet, plancherel, tableaux, percolation);
criterion_main!(benches);
