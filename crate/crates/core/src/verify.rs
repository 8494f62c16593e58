//! Verification suites: seeded, deterministic batteries of checks with a
//! machine-readable report.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::combinat::{all_permutations, factorial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ewens::{
    cycle_type_law_exact, esf_weight_exact, ewens_law_exact, insertion_path_law, projected_law_exact,
};
use crate::kernels::{bulk_limit_check, window, DiscreteBessel, PoissonizedEnsemble};
use crate::measures::{
    last_passage_time, matrix_pushforward_check, meixner_check, mixed_zmeasure_weight, negative_binomial_tail,
    normalize_over, rsk_knuth, sample_geometric_matrix, schur_weight, words_pushforward_check, zmeasure_weight,
    NonnegativeMatrix, SchurSpec, ZParams,
};
use crate::pdirichlet::{expected_atoms_in, sample_pd, sample_pd_stickbreak, PdMethod};
use crate::plancherel::{
    fluctuation_integral, lis_length, plancherel_weight, plancherel_weight_exact, rsk, rsk_inverse,
    rsk_pushforward_exact, sample_plancherel, sample_plancherel_hookwalk, sup_distance_to_omega, KerovSeries,
    PlancherelSampler, KEROV_TERMS,
};
use crate::rng::{chunked, substream};
use crate::stats::{chi_square, chi_square_pooled, ks_two_sample, mean, median, std_error, variance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    EwensExact,
    PdCross,
    PlancherelExact,
    LimitShape,
    KerovClt,
    Determinantal,
    BulkLimit,
    Zmeasures,
    SchurVsZ,
    RskPushforwards,
    Lpp,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::EwensExact,
        Suite::PdCross,
        Suite::PlancherelExact,
        Suite::LimitShape,
        Suite::KerovClt,
        Suite::Determinantal,
        Suite::BulkLimit,
        Suite::Zmeasures,
        Suite::SchurVsZ,
        Suite::RskPushforwards,
        Suite::Lpp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EwensExact => "ewens-exact",
            Suite::PdCross => "pd-cross",
            Suite::PlancherelExact => "plancherel-exact",
            Suite::LimitShape => "limit-shape",
            Suite::KerovClt => "kerov-clt",
            Suite::Determinantal => "determinantal",
            Suite::BulkLimit => "bulk-limit",
            Suite::Zmeasures => "zmeasures",
            Suite::SchurVsZ => "schur-vs-z",
            Suite::RskPushforwards => "rsk-pushforwards",
            Suite::Lpp => "lpp",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::InvalidParameter(format!("unknown suite `{s}`, expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How `measured` is compared with `tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `measured < tolerance`
    Below,
    /// `measured ≤ tolerance`
    AtMost,
    /// `measured ≥ tolerance`
    AtLeast,
}

impl Bound {
    fn holds(self, measured: f64, tolerance: f64) -> bool {
        match self {
            Bound::Below => measured < tolerance,
            Bound::AtMost => measured <= tolerance,
            Bound::AtLeast => measured >= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// The identity or theorem the check exercises.
    pub anchor: String,
    pub status: Status,
    pub measured: f64,
    pub tolerance: f64,
    pub bound: Bound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_s: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Parameters of the determinantal suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeterminantalConfig {
    pub nu: f64,
    /// Sites `−(w − ½), …, w − ½`.
    pub window: i64,
    /// Largest enumerated diagram size.
    pub cutoff: usize,
    pub tol: f64,
}

impl Default for DeterminantalConfig {
    fn default() -> Self {
        DeterminantalConfig { nu: 2.0, window: 6, cutoff: 30, tol: 1e-6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub seed: u64,
    /// Record wall-clock time per check; off by default so reports are reproducible byte for byte.
    pub timings: bool,
    pub determinantal: DeterminantalConfig,
}

impl RunOptions {
    pub fn seeded(seed: u64) -> Self {
        RunOptions { seed, timings: false, determinantal: DeterminantalConfig::default() }
    }
}

struct Recorder {
    timings: bool,
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, anchor: &str, bound: Bound, tolerance: f64, f: impl FnOnce() -> Result<f64>) -> Result<()> {
        let start = Instant::now();
        let measured = f()?;
        let elapsed = start.elapsed().as_secs_f64();
        let status = if bound.holds(measured, tolerance) { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            status,
            measured,
            tolerance,
            bound,
            runtime_s: self.timings.then_some(elapsed),
        });
        Ok(())
    }
}

pub fn run_suite(suite: Suite, opts: RunOptions) -> Result<Report> {
    let mut r = Recorder { timings: opts.timings, checks: Vec::new() };
    let seed = opts.seed;
    match suite {
        Suite::EwensExact => ewens_exact(&mut r)?,
        Suite::PdCross => pd_cross(&mut r, seed)?,
        Suite::PlancherelExact => plancherel_exact(&mut r, seed)?,
        Suite::LimitShape => limit_shape(&mut r, seed)?,
        Suite::KerovClt => kerov_clt(&mut r, seed)?,
        Suite::Determinantal => determinantal(&mut r, opts.determinantal)?,
        Suite::BulkLimit => bulk_limit(&mut r)?,
        Suite::Zmeasures => zmeasures(&mut r)?,
        Suite::SchurVsZ => schur_vs_z(&mut r)?,
        Suite::RskPushforwards => rsk_pushforwards(&mut r, seed)?,
        Suite::Lpp => lpp(&mut r, seed)?,
    }
    let passed = r.checks.iter().all(|c| c.status == Status::Pass);
    Ok(Report { suite: suite.name().into(), seed, checks: r.checks, passed })
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

const THETAS: [(i64, i64); 3] = [(1, 2), (1, 1), (2, 1)];

fn mismatches<K: Eq + std::hash::Hash>(a: &std::collections::HashMap<K, BigRational>, b: &std::collections::HashMap<K, BigRational>) -> usize {
    let extra = b.keys().filter(|k| !a.contains_key(k)).count();
    a.iter().filter(|(k, v)| b.get(k) != Some(v)).count() + extra
}

fn ewens_exact(r: &mut Recorder) -> Result<()> {
    for (a, b) in THETAS {
        let th = q(a, b);
        r.check(format!("insertion sampler law, θ = {th}, n ≤ 6"), "Ewens measure θ^#cycles/(θ)_n", Bound::AtMost, 0.0, || {
            Ok((1..=6).map(|n| mismatches(&insertion_path_law(n, &th), &ewens_law_exact(n, &th))).sum::<usize>() as f64)
        })?;
        r.check(format!("canonical projection pushforward, θ = {th}, n ≤ 6"), "Ewens measures are projection-consistent", Bound::AtMost, 0.0, || {
            Ok((2..=6).map(|n| mismatches(&projected_law_exact(n, &th), &ewens_law_exact(n - 1, &th))).sum::<usize>() as f64)
        })?;
        r.check(format!("ESF against class aggregation, θ = {th}, n ≤ 8"), "Ewens sampling formula", Bound::AtMost, 0.0, || {
            let mut bad = 0;
            for n in 1..=8 {
                let law = cycle_type_law_exact(n, &th);
                let mut total = BigRational::zero();
                for rho in partitions_of(n) {
                    let w = esf_weight_exact(&rho, &th);
                    if law.get(&rho) != Some(&w) {
                        bad += 1;
                    }
                    total += w;
                }
                if !total.is_one() {
                    bad += 1;
                }
            }
            Ok(bad as f64)
        })?;
    }
    Ok(())
}

/// `max_i |observed_i − expected_i| / se_i` over bins of `[0.1, 0.9]`.
fn intensity_z(theta: f64, samples: usize, seed: u64) -> Result<f64> {
    let edges: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let counts: Vec<Vec<f64>> = chunked(samples, seed, &format!("pd-rho1-{theta}"), |rng| {
        let p = sample_pd_stickbreak(theta, 10, rng).expect("θ > 0");
        edges.windows(2).map(|w| p.coords().iter().filter(|&&x| x >= w[0] && x < w[1]).count() as f64).collect()
    });
    let mut worst: f64 = 0.0;
    for (b, w) in edges.windows(2).enumerate() {
        let col: Vec<f64> = counts.iter().map(|c| c[b]).collect();
        let z = (mean(&col) - expected_atoms_in(w[0], w[1], theta)) / std_error(&col);
        worst = worst.max(z.abs());
    }
    Ok(worst)
}

fn pd_cross(r: &mut Recorder, seed: u64) -> Result<()> {
    let methods = [("stick", PdMethod::Stick), ("dirichlet", PdMethod::Dirichlet), ("poisson", PdMethod::Poisson)];
    for (a, b) in THETAS {
        let theta = a as f64 / b as f64;
        let x1: Vec<Vec<f64>> = methods
            .iter()
            .map(|(name, m)| chunked(10_000, seed, &format!("pd-{name}-{theta}"), |rng| sample_pd(*m, theta, 1, rng).expect("θ > 0").x(1)))
            .collect();
        for i in 0..3 {
            for j in i + 1..3 {
                r.check(format!("KS on x1, {} vs {}, θ = {theta}", methods[i].0, methods[j].0), "Poisson–Dirichlet descriptions agree", Bound::AtLeast, 0.01, || {
                    Ok(ks_two_sample(&x1[i], &x1[j]).p_value)
                })?;
            }
        }
        r.check(format!("one-point intensity on [0.1, 0.9], θ = {theta}, max |z|"), "PD correlation function ρ1", Bound::Below, 3.0, || intensity_z(theta, 100_000, seed))?;
    }
    r.check("P(x1 ≥ a) = ln(1/a) at θ = 1, a ∈ {0.5, 0.7, 0.9}, max |z|", "PD correlation function ρ1", Bound::Below, 3.0, || {
        let xs = chunked(100_000, seed, "pd-ln", |rng| sample_pd_stickbreak(1.0, 1, rng).expect("θ > 0").x(1));
        let mut worst: f64 = 0.0;
        for a in [0.5f64, 0.7, 0.9] {
            let ind: Vec<f64> = xs.iter().map(|&x| if x >= a { 1.0 } else { 0.0 }).collect();
            worst = worst.max(((mean(&ind) - (1.0 / a).ln()) / std_error(&ind)).abs());
        }
        Ok(worst)
    })?;
    Ok(())
}

fn plancherel_exact(r: &mut Recorder, seed: u64) -> Result<()> {
    r.check("Σ dim² = n! for n ≤ 12", "Burnside identity", Bound::AtMost, 0.0, || {
        Ok((0..=12)
            .filter(|&n| partitions_of(n).iter().map(|l| l.dim().pow(2)).sum::<BigUint>() != factorial(n))
            .count() as f64)
    })?;
    r.check("LIS = first row of the RSK shape on S7", "Ulam problem via RSK", Bound::AtMost, 0.0, || {
        Ok(all_permutations(7).iter().filter(|s| lis_length(s) != rsk(s).0.shape().first_row()).count() as f64)
    })?;
    r.check("RSK round trip and injectivity on S6", "RSK bijection", Bound::AtMost, 0.0, || {
        let perms = all_permutations(6);
        let mut seen = HashSet::new();
        let mut bad = 0;
        for s in &perms {
            let (p, t) = rsk(s);
            if rsk_inverse(&p, &t)? != *s {
                bad += 1;
            }
            if !seen.insert((p.rows().to_vec(), t.rows().to_vec())) {
                bad += 1;
            }
        }
        Ok(bad as f64)
    })?;
    r.check("RSK shape law = Plancherel for n ≤ 8", "Plancherel measure dim²/n!", Bound::AtMost, 0.0, || {
        let mut bad = 0;
        for n in 0..=8 {
            let law = rsk_pushforward_exact(n);
            let parts = partitions_of(n);
            bad += parts.iter().filter(|l| law.get(*l) != Some(&plancherel_weight_exact(l))).count();
            bad += law.len().saturating_sub(parts.len());
        }
        Ok(bad as f64)
    })?;
    for n in 1..=6 {
        r.check(format!("growth sampler chi-square, n = {n}"), "Plancherel measure dim²/n!", Bound::AtLeast, 0.01, || {
            let parts = partitions_of(n);
            let shapes = chunked(100_000, seed, &format!("hookwalk-{n}"), |rng| sample_plancherel_hookwalk(n, rng));
            let observed: Vec<u64> = parts.iter().map(|l| shapes.iter().filter(|s| *s == l).count() as u64).collect();
            if observed.iter().sum::<u64>() != shapes.len() as u64 {
                return Ok(0.0);
            }
            let expected: Vec<f64> = parts.iter().map(plancherel_weight).collect();
            Ok(chi_square(&observed, &expected).p_value)
        })?;
    }
    Ok(())
}

/// Median sup distance to the limit shape over `count` seeded samples.
pub fn median_sup_distance(n: usize, count: usize, seed: u64) -> Result<f64> {
    let ds = chunked(count, seed, &format!("limit-{n}"), |rng| sup_distance_to_omega(&sample_plancherel(PlancherelSampler::Rsk, n, rng)));
    Ok(median(&ds.into_iter().collect::<Result<Vec<f64>>>()?))
}

fn limit_shape(r: &mut Recorder, seed: u64) -> Result<()> {
    r.check("median sup distance ratio, n = 6400 vs n = 100", "limit shape Ω", Bound::Below, 0.5, || {
        Ok(median_sup_distance(6400, 50, seed)? / median_sup_distance(100, 50, seed)?)
    })
}

/// Empirical variance of `∫ x² Δ_n` and of its series counterpart.
pub fn kerov_variances(n: usize, samples: usize, series_samples: usize, seed: u64) -> Result<(f64, f64)> {
    let coeffs = [0.0, 0.0, 1.0];
    let emp = chunked(samples, seed, &format!("kerov-{n}"), |rng| {
        fluctuation_integral(&sample_plancherel(PlancherelSampler::Rsk, n, rng), &coeffs)
    })
    .into_iter()
    .collect::<Result<Vec<f64>>>()?;
    let series = KerovSeries::new(&coeffs, KEROV_TERMS)?;
    let sim = chunked(series_samples, seed, "kerov-series", |rng| series.sample(rng));
    Ok((variance(&emp), variance(&sim)))
}

fn kerov_clt(r: &mut Recorder, seed: u64) -> Result<()> {
    r.check("variance of ∫x²Δ_n at n = 4000 vs series, relative gap", "Kerov central limit theorem", Bound::Below, 0.15, || {
        let (emp, sim) = kerov_variances(4000, 2000, 100_000, seed)?;
        Ok((emp / sim - 1.0).abs())
    })
}

fn determinantal(r: &mut Recorder, cfg: DeterminantalConfig) -> Result<()> {
    if cfg.window < 1 {
        return Err(Error::InvalidParameter(format!("window must be at least 1, got {}", cfg.window)));
    }
    let ens = PoissonizedEnsemble::new(cfg.nu, cfg.cutoff)?;
    let (nu, cutoff, sites) = (cfg.nu, cfg.cutoff, 2 * cfg.window);
    r.check(format!("Poisson tail beyond {cutoff} boxes, ν = {nu}"), "poissonized Plancherel measure", Bound::Below, 1e-9, || Ok(ens.tail_bound()))?;
    r.check(format!("max |det J − enumeration| over |X| ≤ 2 in {sites} sites, ν = {nu}"), "discrete Bessel kernel", Bound::Below, cfg.tol, || {
        let sites = window(cfg.window);
        let kernel = DiscreteBessel::new(cfg.nu, cfg.window as usize + 2)?;
        let mut sets: Vec<Vec<_>> = vec![Vec::new()];
        for (i, &x) in sites.iter().enumerate() {
            sets.push(vec![x]);
            for &y in &sites[i + 1..] {
                sets.push(vec![x, y]);
            }
        }
        let mut worst: f64 = 0.0;
        for xs in sets {
            worst = worst.max((kernel.correlation(&xs)? - ens.correlation(&xs).value).abs());
        }
        Ok(worst)
    })
}

fn bulk_limit(r: &mut Recorder) -> Result<()> {
    for a in [0.0, 0.5, 1.0] {
        r.check(format!("bulk error ratio along ν = 100, 400, 1600, a = {a}"), "discrete sine kernel limit", Bound::Below, 1.0, || {
            let rows = bulk_limit_check(a, &[100.0, 400.0, 1600.0])?;
            Ok(rows.windows(2).map(|w| w[1].max_error / w[0].max_error).fold(0.0, f64::max))
        })?;
    }
    Ok(())
}

fn zmeasures(r: &mut Recorder) -> Result<()> {
    for (z, zp) in [(2.0, 3.0), (1.5, 1.5), (0.5, 4.0)] {
        r.check(format!("Σ_λ⊢n weight = 1 for n ≤ 8, (z, z′) = ({z}, {zp})"), "z-measure normalization", Bound::Below, 1e-10, || {
            let p = ZParams::real(z, zp);
            let mut worst: f64 = 0.0;
            for n in 0..=8 {
                let s = partitions_of(n).iter().map(|l| zmeasure_weight(l, &p)).sum::<Result<f64>>()?;
                worst = worst.max((s - 1.0).abs());
            }
            Ok(worst)
        })?;
    }
    r.check("principal series normalization for n ≤ 8, z = 0.7 + 1.3i", "z-measure normalization", Bound::Below, 1e-10, || {
        let p = ZParams::principal(Complex64::new(0.7, 1.3))?;
        let mut worst: f64 = 0.0;
        for n in 0..=8 {
            let s = partitions_of(n).iter().map(|l| zmeasure_weight(l, &p)).sum::<Result<f64>>()?;
            worst = worst.max((s - 1.0).abs());
        }
        Ok(worst)
    })?;
    r.check("fixed-n degeneration to Plancherel, n = 5, error ratio along t = 10, 100, 1000", "z-measures degenerate to Plancherel", Bound::Below, 1.0, || {
        let errs = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&t| {
                let p = ZParams::real(t, t);
                partitions_of(5).iter().map(|l| Ok((zmeasure_weight(l, &p)? - plancherel_weight(l)).abs())).try_fold(0.0, |m: f64, e: Result<f64>| e.map(|e| m.max(e)))
            })
            .collect::<Result<Vec<f64>>>()?;
        Ok(errs.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max))
    })?;
    r.check("mixed degeneration to poissonized Plancherel, |λ| ≤ 4, ν = 2, error ratio along t", "z-measures degenerate to Plancherel", Bound::Below, 1.0, || {
        let errs = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&t| {
                let p = ZParams::real(t, t);
                let mut worst: f64 = 0.0;
                for l in (0..=4).flat_map(partitions_of) {
                    let m = mixed_zmeasure_weight(&l, &p, 2.0 / (t * t))?;
                    worst = worst.max((m - crate::kernels::poissonized_plancherel_weight(&l, 2.0)?).abs());
                }
                Ok(worst)
            })
            .collect::<Result<Vec<f64>>>()?;
        Ok(errs.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max))
    })?;
    r.check("mixed partial sum over |λ| ≤ 12 plus negative binomial tail, (2, 3, 0.3)", "negative binomial mixture", Bound::Below, 1e-12, || {
        let p = ZParams::real(2.0, 3.0);
        let s = (0..=12).flat_map(partitions_of).map(|l| mixed_zmeasure_weight(&l, &p, 0.3)).sum::<Result<f64>>()?;
        let tail = negative_binomial_tail(12, 6.0, 0.3);
        Ok(if s > 1.0 + 1e-12 { f64::INFINITY } else { (s + tail - 1.0).abs() })
    })?;
    for n in 1..=3 {
        for b in [1.0, 2.5] {
            r.check(format!("Meixner ratio spread, N = {n}, b = {b}, ξ = 0.3"), "Meixner ensemble", Bound::Below, 1e-10, || {
                let rep = meixner_check(n, b, 0.3, 8)?;
                Ok(if rep.support_confined { rep.relative_spread } else { f64::INFINITY })
            })?;
        }
    }
    Ok(())
}

fn schur_vs_z(r: &mut Recorder) -> Result<()> {
    let spec = SchurSpec::Zxi { z: 2.0, zp: 3.0, xi: 0.3 };
    let (phi, psi) = spec.pair()?;
    let c = spec.closed_form().expect("z pair has a closed form");
    r.check("Schur weight / closed form vs mixed z-measure, |λ| ≤ 6", "Schur measure with the z specialization", Bound::Below, 1e-10, || {
        let p = ZParams::real(2.0, 3.0);
        let mut worst: f64 = 0.0;
        for l in (0..=6).flat_map(partitions_of) {
            worst = worst.max((schur_weight(&l, &phi, &psi)? / c - mixed_zmeasure_weight(&l, &p, 0.3)?).abs());
        }
        Ok(worst)
    })?;
    r.check("closed form (1−ξ)^(−zz′) vs truncated sum over |λ| ≤ 30, relative", "Cauchy identity", Bound::Below, 1e-10, || {
        let norm = normalize_over(&phi, &psi, 30, Some(c))?;
        Ok((norm.truncated / c - 1.0).abs())
    })
}

fn rsk_pushforwards(r: &mut Recorder, seed: u64) -> Result<()> {
    r.check("matrices 2×2, n ≤ 4, exact", "RSK pushforward is the z-measure", Bound::AtMost, 0.0, || {
        let mut bad = 0;
        for n in 0..=4 {
            if !matrix_pushforward_check(2, 2, n)?.passed() {
                bad += 1;
            }
        }
        Ok(bad as f64)
    })?;
    r.check("words over 2 letters, n ≤ 6, exact", "Schensted insertion of random words", Bound::AtMost, 0.0, || {
        let mut bad = 0;
        for n in 0..=6 {
            if !words_pushforward_check(2, n)?.passed() {
                bad += 1;
            }
        }
        Ok(bad as f64)
    })?;
    r.check("geometric 2×2 matrices, ξ = 0.2, shape chi-square", "RSK pushforward is the mixed z-measure", Bound::AtLeast, 0.01, || {
        let shapes = chunked(100_000, seed, "geometric-shape", |rng| sample_geometric_matrix(2, 2, 0.2, rng).map(|m| rsk_knuth(&m)))
            .into_iter()
            .collect::<Result<Vec<Partition>>>()?;
        let p = ZParams::real(2.0, 2.0);
        let support: Vec<Partition> = (0..=14).flat_map(partitions_of).filter(|l| l.length() <= 2).collect();
        let mut expected = support.iter().map(|l| mixed_zmeasure_weight(l, &p, 0.2)).collect::<Result<Vec<f64>>>()?;
        let mut observed: Vec<u64> = support.iter().map(|l| shapes.iter().filter(|s| *s == l).count() as u64).collect();
        expected.push((1.0 - expected.iter().sum::<f64>()).max(0.0));
        observed.push(shapes.len() as u64 - observed.iter().sum::<u64>());
        Ok(chi_square_pooled(&observed, &expected, 5.0).p_value)
    })
}

/// Random matrix with dimensions in `1..=5` and entries in `0..=4`.
pub fn random_small_matrix<R: Rng + ?Sized>(rng: &mut R) -> NonnegativeMatrix {
    let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    let entries = (0..a * b).map(|_| rng.gen_range(0..=4)).collect();
    NonnegativeMatrix::new(a, b, entries).expect("sizes match")
}

fn lpp(r: &mut Recorder, seed: u64) -> Result<()> {
    r.check("last passage time = λ1 of the RSK shape, 10⁴ matrices", "last passage percolation", Bound::AtMost, 0.0, || {
        let bad = chunked(10_000, seed, "lpp", |rng| {
            let m = random_small_matrix(rng);
            (last_passage_time(&m) as usize != rsk_knuth(&m).first_row()) as usize
        });
        Ok(bad.into_iter().sum::<usize>() as f64)
    })?;
    r.check("last passage time = λ1 on geometric 10×10 matrices, ξ = 0.5", "last passage percolation", Bound::AtMost, 0.0, || {
        let mut rng = substream(seed, "lpp-geo", 0);
        let mut bad = 0;
        for _ in 0..200 {
            let m = sample_geometric_matrix(10, 10, 0.5, &mut rng)?;
            bad += (last_passage_time(&m) as usize != rsk_knuth(&m).first_row()) as usize;
        }
        Ok(bad as f64)
    })
}
