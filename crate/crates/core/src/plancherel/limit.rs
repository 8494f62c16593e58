use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::combinat::{Partition, Profile};
use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_split};

/// Absolute tolerance for every quadrature against `Ω`.
pub const OMEGA_QUAD_TOL: f64 = 1e-9;

/// The limit shape `Ω`.
pub fn omega(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        x.abs()
    } else {
        2.0 / PI * (x * (x / 2.0).asin() + (4.0 - x * x).sqrt())
    }
}

fn poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// `∫ φ(x) (Ω(x) − |x|) dx` over `[−2, 2]`, split at the kink of `|x|`.
pub fn omega_excess_integral(coeffs: &[f64]) -> f64 {
    let f = |x: f64| poly(coeffs, x) * (omega(x) - x.abs());
    integrate(f, -2.0, 0.0, OMEGA_QUAD_TOL / 2.0) + integrate(f, 0.0, 2.0, OMEGA_QUAD_TOL / 2.0)
}

/// Number of uniform grid points on `[−3, 3]` added to the breakpoints.
pub const SUP_GRID: usize = 10_000;

/// `sup_x |λ̄(x) − Ω(x)|` for the rescaled profile.
///
/// Candidates are the profile breakpoints, `±2`, and a uniform grid on
/// `[−3, 3]`. Between breakpoints the profile has slope `±1` while `|Ω′| < 1`
/// inside `(−2, 2)`, so the difference is monotone on each piece and the
/// breakpoints together with `±2` already attain the supremum; the grid is a
/// safeguard.
pub fn sup_distance_to_omega(lambda: &Partition) -> Result<f64> {
    let p = Profile::rescaled(lambda)?;
    let grid = (0..=SUP_GRID).map(|i| -3.0 + 6.0 * i as f64 / SUP_GRID as f64);
    let d = p
        .breakpoints()
        .into_iter()
        .chain([-2.0, 2.0])
        .chain(grid)
        .map(|x| (p.evaluate(x) - omega(x)).abs())
        .fold(0.0, f64::max);
    Ok(d)
}

/// `∫ φ Δ_n` with `Δ_n = (√n/2)(λ̄ − Ω)` and `φ(x) = Σ coeffs[k] x^k`.
pub fn fluctuation_integral(lambda: &Partition, coeffs: &[f64]) -> Result<f64> {
    let p = Profile::rescaled(lambda)?;
    Ok(fluctuation_from(&p, lambda.size(), coeffs, omega_excess_integral(coeffs)))
}

/// Same as [`fluctuation_integral`] with a precomputed `Ω` part.
pub fn fluctuation_from(profile: &Profile, n: usize, coeffs: &[f64], omega_part: f64) -> f64 {
    (n as f64).sqrt() / 2.0 * (profile.integrate_against(coeffs) - omega_part)
}

/// Truncated series for `∫ φ Δ` where `Δ(2 cos θ) = (1/π) Σ_{k≥2} ξ_k k^{−1/2} sin kθ`.
///
/// `coefficient(k) = ∫_{−2}^{2} sin(k θ(x)) φ(x) dx` with `x = 2 cos θ`.
#[derive(Debug, Clone)]
pub struct KerovSeries {
    weights: Vec<f64>,
}

/// Default truncation order.
pub const KEROV_TERMS: usize = 200;

impl KerovSeries {
    pub fn new(coeffs: &[f64], terms: usize) -> Result<Self> {
        if terms < 2 {
            return Err(Error::InvalidParameter("the series starts at k = 2, need K ≥ 2".into()));
        }
        let weights = (2..=terms)
            .map(|k| {
                let f = |t: f64| (k as f64 * t).sin() * poly(coeffs, 2.0 * t.cos()) * 2.0 * t.sin();
                let c = integrate_split(f, 0.0, PI, k + 1, 1e-12);
                c / (PI * (k as f64).sqrt())
            })
            .collect();
        Ok(KerovSeries { weights })
    }

    pub fn coefficient(&self, k: usize) -> f64 {
        self.weights[k - 2] * PI * (k as f64).sqrt()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.weights
            .iter()
            .map(|w| {
                let z: f64 = StandardNormal.sample(rng);
                w * z
            })
            .sum()
    }

    /// `Σ_k coefficient(k)² / (π² k)`.
    pub fn variance(&self) -> f64 {
        self.weights.iter().map(|w| w * w).sum()
    }
}

pub fn sample_kerov_process<R: Rng + ?Sized>(coeffs: &[f64], terms: usize, rng: &mut R) -> Result<f64> {
    Ok(KerovSeries::new(coeffs, terms)?.sample(rng))
}

/// `u_i = (λ_i − 2√n) / n^{1/6}` for `i ≤ k`.
pub fn edge_statistic(lambda: &Partition, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > lambda.length() {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k ≤ {}, got {k}", lambda.length())));
    }
    let n = lambda.size() as f64;
    Ok((1..=k).map(|i| (lambda.part(i) as f64 - 2.0 * n.sqrt()) / n.powf(1.0 / 6.0)).collect())
}

/// `λ_i` from `u_i`, the inverse of [`edge_statistic`].
pub fn edge_to_row(u: f64, n: usize) -> f64 {
    let n = n as f64;
    2.0 * n.sqrt() + u * n.powf(1.0 / 6.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plancherel::{sample_plancherel_rsk, sample_involution, lis_length};
    use crate::rng::{chunked, substream};
    use crate::stats::{jarque_bera, mean, median, variance};

    #[test]
    fn omega_values() {
        assert!((omega(2.0) - 2.0).abs() < 1e-15);
        assert!((omega(-2.0) - 2.0).abs() < 1e-15);
        assert!((omega(1.999_999_999) - 2.0).abs() < 1e-4);
        assert!((omega(0.0) - 4.0 / PI).abs() < 1e-15);
        assert!((omega_excess_integral(&[1.0]) - 2.0).abs() < 1e-8);
        for k in -40..=40 {
            let x = k as f64 * 0.1;
            assert!(omega(x) >= x.abs() - 1e-15);
        }
    }

    #[test]
    fn sup_distance_basics() {
        assert!(sup_distance_to_omega(&Partition::empty()).is_err());
        let l = Partition::new(vec![3, 2, 1]).unwrap();
        let d = sup_distance_to_omega(&l).unwrap();
        let p = Profile::rescaled(&l).unwrap();
        let dense = (0..=600_000).map(|i| -3.0 + i as f64 * 1e-5).map(|x| (p.evaluate(x) - omega(x)).abs()).fold(0.0, f64::max);
        assert!(d >= 0.0 && (d - dense).abs() < 1e-9);
    }

    #[test]
    fn fluctuation_zero_and_symmetry() {
        let l = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(fluctuation_integral(&l, &[]).unwrap(), 0.0);
        assert_eq!(fluctuation_integral(&l, &[0.0, 0.0]).unwrap(), 0.0);
        let a = fluctuation_integral(&l, &[0.0, 1.0]).unwrap();
        let b = fluctuation_integral(&l.transpose(), &[0.0, 1.0]).unwrap();
        assert!((a + b).abs() < 1e-12);
    }

    #[test]
    fn x_squared_coefficients() {
        // 4cos²θ · 2 sinθ = 2 sinθ + 2 sin3θ, so only k = 3 survives, with value π
        let s = KerovSeries::new(&[0.0, 0.0, 1.0], 10).unwrap();
        assert!((s.coefficient(3) - PI).abs() < 1e-10);
        for k in [2, 4, 5, 9] {
            assert!(s.coefficient(k).abs() < 1e-10);
        }
        assert!((s.variance() - 1.0 / 3.0).abs() < 1e-10);
        assert!(KerovSeries::new(&[1.0], 1).is_err());
    }

    #[test]
    fn kerov_variance_stable_and_gaussian() {
        let phi = [0.0, 0.5, 1.0, 0.0, -0.2];
        let v100 = KerovSeries::new(&phi, 100).unwrap().variance();
        let s = KerovSeries::new(&phi, 200).unwrap();
        assert!(((s.variance() - v100) / s.variance()).abs() < 0.01);
        let xs = chunked(10_000, 21, "kerov", |r| s.sample(r));
        assert!(!jarque_bera(&xs).rejects_at(0.01));
        assert!(mean(&xs).abs() < 4.0 * (variance(&xs) / xs.len() as f64).sqrt());
    }

    #[test]
    fn edge_statistic_inverts() {
        let l = Partition::new(vec![30, 20, 5, 1]).unwrap();
        let u = edge_statistic(&l, 3).unwrap();
        for (i, ui) in u.iter().enumerate() {
            assert!((edge_to_row(*ui, l.size()) - l.part(i + 1) as f64).abs() < 1e-10);
        }
        assert!(u[0] >= u[1] && u[1] >= u[2]);
        assert!(edge_statistic(&l, 5).is_err());
        assert!(edge_statistic(&l, 0).is_err());
    }

    #[test]
    fn edge_median_stabilizes() {
        let med = |n: usize| {
            let us = chunked(100, 31, &format!("edge{n}"), |r| edge_statistic(&sample_plancherel_rsk(n, r), 2).unwrap());
            assert!(us.iter().all(|u| u[0] >= u[1]));
            median(&us.iter().map(|u| u[0]).collect::<Vec<_>>())
        };
        let (a, b) = (med(1000), med(10_000));
        assert!((a - b).abs() < 0.5, "{a} {b}");
    }

    #[test]
    fn involution_lis_median_stabilizes() {
        let med = |n: usize| {
            let us: Vec<f64> = chunked(100, 32, &format!("inv{n}"), |r| {
                let l = lis_length(&sample_involution(n, r)) as f64;
                (l - 2.0 * (n as f64).sqrt()) / (n as f64).powf(1.0 / 6.0)
            });
            median(&us)
        };
        let (a, b) = (med(1000), med(10_000));
        assert!((a - b).abs() < 0.5, "{a} {b}");
    }

    #[test]
    fn sup_distance_shrinks() {
        let mut rng = substream(5, "sup", 0);
        let small = sup_distance_to_omega(&sample_plancherel_rsk(100, &mut rng)).unwrap();
        let big = sup_distance_to_omega(&sample_plancherel_rsk(10_000, &mut rng)).unwrap();
        assert!(big < small);
    }
}
