//! Poisson–Dirichlet distributions `PD(θ)`.
//!
//! Three independent samplers (normalized Poisson process, symmetric Dirichlet
//! with many coordinates, stick-breaking), the closed-form correlation
//! functions, and the map from permutations to cycle-length fractions.

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, Poisson};
use serde::Serialize;

use crate::combinat::Permutation;
use crate::error::{Error, Result};

/// Decreasing prefix of a point of the closed infinite simplex, plus the mass
/// not represented in the prefix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplexPoint {
    xs: Vec<f64>,
    tail: f64,
}

impl SimplexPoint {
    pub fn new(mut xs: Vec<f64>, tail: f64) -> Result<Self> {
        if xs.iter().any(|&x| !(x >= 0.0)) || !(tail >= -1e-12) {
            return Err(Error::InvalidParameter("simplex coordinates must be nonnegative".into()));
        }
        xs.sort_by(|a, b| b.total_cmp(a));
        let total: f64 = xs.iter().sum::<f64>() + tail;
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("coordinates plus tail sum to {total}, not 1")));
        }
        Ok(SimplexPoint { xs, tail: tail.max(0.0) })
    }

    pub fn coords(&self) -> &[f64] {
        &self.xs
    }

    /// `x_i`, 1-based; zero past the stored prefix.
    pub fn x(&self, i: usize) -> f64 {
        self.xs.get(i - 1).copied().unwrap_or(0.0)
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }
}

/// `u_1 = v_1`, `u_n = v_n (1−v_1)…(1−v_{n−1})`.
pub fn stick_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut rest = 1.0;
    v.iter()
        .map(|&vi| {
            let u = vi * rest;
            rest -= u;
            u
        })
        .collect()
}

/// `v_n = u_n / (1 − u_1 − … − u_{n−1})`; needs every such partial sum below 1.
///
/// Both directions update the remaining mass as `rest − u` in the same order,
/// so the round trip only loses the rounding of one product and one quotient.
pub fn simplex_to_stick(u: &[f64]) -> Result<Vec<f64>> {
    let mut rest = 1.0;
    let mut out = Vec::with_capacity(u.len());
    for (k, &ui) in u.iter().enumerate() {
        if rest <= 0.0 {
            return Err(Error::Degenerate(format!("partial sum reaches 1 before coordinate {}", k + 1)));
        }
        out.push(ui / rest);
        rest -= ui;
    }
    Ok(out)
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(Error::InvalidParameter(format!("PD parameter must be positive, got {theta}")));
    }
    Ok(())
}

/// A `Beta(1, θ)` stick by inversion, `1 − (1−U)^{1/θ}`.
pub fn beta_stick<R: Rng + ?Sized>(theta: f64, rng: &mut R) -> f64 {
    let u: f64 = rng.gen();
    -(1.0 / theta * (-u).ln_1p()).exp_m1()
}

/// Undiscovered mass must fall below this fraction of the `k`-th largest atom.
pub const STICK_STOP_RATIO: f64 = 1e-3;

fn insert_top_k(top: &mut Vec<f64>, k: usize, x: f64) -> Option<f64> {
    let pos = top.partition_point(|&t| t >= x);
    if pos >= k {
        return Some(x);
    }
    top.insert(pos, x);
    if top.len() > k {
        top.pop()
    } else {
        None
    }
}

/// Stick-breaking sampler, top `k` coordinates.
pub fn sample_pd_stickbreak<R: Rng + ?Sized>(theta: f64, k: usize, rng: &mut R) -> Result<SimplexPoint> {
    check_theta(theta)?;
    if k == 0 {
        return Err(Error::InvalidParameter("prefix length k must be at least 1".into()));
    }
    let mut top: Vec<f64> = Vec::with_capacity(k + 1);
    let mut rest = 1.0;
    let mut dropped = 0.0;
    loop {
        let v = beta_stick(theta, rng);
        let atom = v * rest;
        rest *= 1.0 - v;
        if let Some(out) = insert_top_k(&mut top, k, atom) {
            dropped += out;
        }
        let kth = if top.len() == k { top[k - 1] } else { 0.0 };
        if (top.len() == k && rest < STICK_STOP_RATIO * kth) || rest == 0.0 {
            break;
        }
    }
    Ok(SimplexPoint { xs: top, tail: rest + dropped })
}

/// Symmetric Dirichlet `D_n(θ)` with `n` coordinates of shape `θ/n`, sorted, top `k`.
///
/// Gammas of tiny shape underflow, so each is drawn on the log scale as
/// `ln G_{α+1} + ln(U)/α`.
pub fn sample_pd_dirichlet_limit<R: Rng + ?Sized>(theta: f64, n: usize, k: usize, rng: &mut R) -> Result<SimplexPoint> {
    check_theta(theta)?;
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter("need n ≥ 1 and k ≥ 1".into()));
    }
    let alpha = theta / n as f64;
    let boosted = Gamma::new(alpha + 1.0, 1.0).expect("positive shape");
    let logs: Vec<f64> = (0..n)
        .map(|_| {
            let g: f64 = boosted.sample(rng);
            let u: f64 = rng.gen();
            g.ln() + u.ln() / alpha
        })
        .collect();
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut xs: Vec<f64> = logs.iter().map(|l| (l - max).exp()).collect();
    let total: f64 = xs.iter().sum();
    xs.iter_mut().for_each(|x| *x /= total);
    xs.sort_by(|a, b| b.total_cmp(a));
    let tail: f64 = xs[k.min(n)..].iter().sum();
    xs.truncate(k);
    Ok(SimplexPoint { xs, tail })
}

/// Draw of the Poisson-process construction: the normalized point and the total mass `r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoissonDraw {
    pub point: SimplexPoint,
    pub total: f64,
}

/// Points of the Poisson process with intensity `θ τ^{−1} e^{−τ}` on `[ε, ∞)`, by thinning.
///
/// Dominating intensities: `θ/τ` on `[ε, 1]` (log-uniform proposals,
/// acceptance `e^{−τ}`) and `θ e^{−τ}` on `[1, ∞)` (acceptance `1/τ`).
/// The discarded part `(0, ε)` carries expected mass at most `θε`.
pub fn sample_poisson_points<R: Rng + ?Sized>(theta: f64, eps: f64, rng: &mut R) -> Vec<f64> {
    let mut pts = Vec::new();
    let ln_eps = eps.ln();
    let inner = theta * -ln_eps;
    if inner > 0.0 {
        let count = Poisson::new(inner).expect("positive mean").sample(rng) as usize;
        for _ in 0..count {
            let u: f64 = rng.gen();
            let tau = (ln_eps * u).exp();
            if rng.gen::<f64>() < (-tau).exp() {
                pts.push(tau);
            }
        }
    }
    let outer = theta * (-1.0f64).exp();
    let count = Poisson::new(outer).expect("positive mean").sample(rng) as usize;
    for _ in 0..count {
        let e: f64 = Exp1.sample(rng);
        let tau = 1.0 + e;
        if rng.gen::<f64>() < 1.0 / tau {
            pts.push(tau);
        }
    }
    pts.sort_by(|a, b| b.total_cmp(a));
    pts
}

pub fn sample_poisson_projection<R: Rng + ?Sized>(theta: f64, k: usize, eps: f64, rng: &mut R) -> Result<PoissonDraw> {
    check_theta(theta)?;
    if !(eps > 0.0 && eps < 1.0) || k == 0 {
        return Err(Error::InvalidParameter("need 0 < ε < 1 and k ≥ 1".into()));
    }
    loop {
        let pts = sample_poisson_points(theta, eps, rng);
        if pts.is_empty() {
            // probability e^{−θ(E1(ε))}: negligible for the default cutoff, redraw
            continue;
        }
        let total: f64 = pts.iter().sum();
        let xs: Vec<f64> = pts.iter().take(k).map(|y| y / total).collect();
        let tail = pts.iter().skip(k).sum::<f64>() / total;
        return Ok(PoissonDraw { point: SimplexPoint { xs, tail }, total });
    }
}

pub const DEFAULT_POISSON_CUTOFF: f64 = 1e-8;

pub fn sample_pd_poisson<R: Rng + ?Sized>(theta: f64, k: usize, eps: f64, rng: &mut R) -> Result<SimplexPoint> {
    Ok(sample_poisson_projection(theta, k, eps, rng)?.point)
}

/// `ρ_m(u_1,…,u_m) = θ^m (1 − Σu)^{θ−1} / ∏u`, and `0` once `Σu ≥ 1`.
pub fn pd_correlation(us: &[f64], theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if us.iter().any(|&u| !(u > 0.0 && u <= 1.0)) {
        return Err(Error::InvalidParameter("arguments must lie in (0, 1]".into()));
    }
    let s: f64 = us.iter().sum();
    if s >= 1.0 {
        return Ok(0.0);
    }
    let prod: f64 = us.iter().product();
    Ok(theta.powi(us.len() as i32) * (1.0 - s).powf(theta - 1.0) / prod)
}

/// `∫_a^b ρ_1(u) du`, the expected number of atoms in `[a, b]`.
pub fn expected_atoms_in(a: f64, b: f64, theta: f64) -> f64 {
    crate::quad::integrate(|u| theta * (1.0 - u).powf(theta - 1.0) / u, a, b.min(1.0), 1e-12)
}

/// Cycle lengths of `s` in decreasing order, divided by `n`.
pub fn ewens_to_simplex(s: &Permutation) -> SimplexPoint {
    let n = s.len() as f64;
    let xs = s.cycle_type().parts().iter().map(|&p| p as f64 / n).collect();
    SimplexPoint { xs, tail: 0.0 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PdMethod {
    Stick,
    Dirichlet,
    Poisson,
}

/// Default order of the Dirichlet approximation.
pub const DEFAULT_DIRICHLET_ORDER: usize = 512;

pub fn sample_pd<R: Rng + ?Sized>(method: PdMethod, theta: f64, k: usize, rng: &mut R) -> Result<SimplexPoint> {
    match method {
        PdMethod::Stick => sample_pd_stickbreak(theta, k, rng),
        PdMethod::Dirichlet => sample_pd_dirichlet_limit(theta, DEFAULT_DIRICHLET_ORDER, k, rng),
        PdMethod::Poisson => sample_pd_poisson(theta, k, DEFAULT_POISSON_CUTOFF, rng),
    }
}
