//! Poissonized Plancherel measure and its correlation kernels.
//!
//! Under `M_ν(λ) = e^{−ν} ν^{|λ|} (dim λ / |λ|!)²` the configuration
//! `L(λ) ⊂ Z′` is determinantal with the discrete Bessel kernel; deep in the
//! bulk that kernel approaches the discrete sine kernel.

mod bessel;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

pub use bessel::{bessel_j, BesselTable, MAX_DEPTH};

use crate::combinat::{ln_factorial, partitions_of, HalfInt, Partition, PointConfiguration};
use crate::error::{Error, Result};

fn check_nu(nu: f64) -> Result<()> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::InvalidParameter(format!("ν must be positive, got {nu}")));
    }
    Ok(())
}

pub fn poissonized_plancherel_weight(lambda: &Partition, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    let n = lambda.size();
    Ok((-nu + n as f64 * nu.ln() + 2.0 * (lambda.ln_dim() - ln_factorial(n))).exp())
}

/// `P(N > n)` for `N ~ Poisson(ν)`, summed directly over the tail.
pub fn poisson_tail(n: usize, nu: f64) -> f64 {
    let mut term = (-nu + (n + 1) as f64 * nu.ln() - ln_factorial(n + 1)).exp();
    let mut sum = 0.0;
    let mut k = n + 1;
    while term > 1e-300 && (term > sum * 1e-17 || (k as f64) < nu) {
        sum += term;
        k += 1;
        term *= nu / k as f64;
    }
    sum
}

/// A term of the kernel series is negligible below this.
pub const SERIES_FLOOR: f64 = 1e-16;
/// Consecutive negligible terms before the series is cut.
pub const SERIES_RUN: usize = 10;

/// Discrete Bessel kernel `J(x, y) = Σ_{s ∈ Z′, s > 0} J_{x+s}(2√ν) J_{y+s}(2√ν)`.
#[derive(Debug, Clone)]
pub struct DiscreteBessel {
    nu: f64,
    table: BesselTable,
}

impl DiscreteBessel {
    /// Kernel able to evaluate at `|x|, |y| ≤ reach`.
    pub fn new(nu: f64, reach: usize) -> Result<Self> {
        check_nu(nu)?;
        let z = 2.0 * nu.sqrt();
        let max = reach + z.ceil() as usize + 40 + 10 * z.cbrt().ceil() as usize;
        Ok(DiscreteBessel { nu, table: BesselTable::new(z, max)? })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    fn order_limit(&self) -> i64 {
        self.table.max_order() as i64
    }

    /// Series form; symmetric in `x, y` term by term.
    pub fn eval(&self, x: HalfInt, y: HalfInt) -> Result<f64> {
        // s = k + ½ turns x + s into the integer floor(x) + 1 + k
        let (mx, my) = (x.floor() + 1, y.floor() + 1);
        let z = self.table.z();
        let mut sum = 0.0;
        let mut quiet = 0;
        for k in 0.. {
            let (a, b) = (mx + k, my + k);
            if a.max(b) > self.order_limit() {
                return Err(Error::NonConvergence { depth: self.table.max_order() });
            }
            let t = self.table.get(a) * self.table.get(b);
            sum += t;
            if (a.min(b) as f64) > z && t.abs() < SERIES_FLOOR {
                quiet += 1;
                if quiet == SERIES_RUN {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        Ok(sum)
    }

    /// Ratio form `√ν (J_{x−½} J_{y+½} − J_{x+½} J_{y−½}) / (x − y)`, for `x ≠ y`.
    pub fn eval_ratio(&self, x: HalfInt, y: HalfInt) -> Result<f64> {
        if x == y {
            return Err(Error::InvalidParameter("the ratio form is undefined on the diagonal".into()));
        }
        let j = |m: i64| self.table.get(m);
        let (fx, fy) = (x.floor(), y.floor());
        Ok(self.nu.sqrt() * (j(fx) * j(fy + 1) - j(fx + 1) * j(fy)) / (x.value() - y.value()))
    }

    /// `det[J(x_i, x_j)]`.
    pub fn correlation(&self, xs: &[HalfInt]) -> Result<f64> {
        let k = xs.len();
        let mut m = nalgebra::DMatrix::<f64>::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self.eval(xs[i], xs[j])?;
            }
        }
        Ok(if k == 0 { 1.0 } else { m.determinant() })
    }
}

pub fn discrete_bessel_kernel(x: HalfInt, y: HalfInt, nu: f64) -> Result<f64> {
    let reach = x.floor().unsigned_abs().max(y.floor().unsigned_abs()) as usize + 1;
    DiscreteBessel::new(nu, reach)?.eval(x, y)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Correlation {
    pub value: f64,
    /// Mass of partitions beyond the cutoff, `P(Poisson(ν) > cutoff)`.
    pub tail_bound: f64,
}

/// Every partition with at most `cutoff` boxes with its poissonized Plancherel weight.
pub struct PoissonizedEnsemble {
    nu: f64,
    cutoff: usize,
    members: Vec<(PointConfiguration, f64)>,
}

impl PoissonizedEnsemble {
    pub fn new(nu: f64, cutoff: usize) -> Result<Self> {
        check_nu(nu)?;
        let members = (0..=cutoff)
            .into_par_iter()
            .flat_map_iter(|n| {
                partitions_of(n).into_iter().map(move |l| {
                    let w = poissonized_plancherel_weight(&l, nu).expect("ν checked");
                    (PointConfiguration::from_partition(&l), w)
                })
            })
            .collect();
        Ok(PoissonizedEnsemble { nu, cutoff, members })
    }

    pub fn tail_bound(&self) -> f64 {
        poisson_tail(self.cutoff, self.nu)
    }

    /// `Σ M_ν(λ)` over the enumerated `λ` with `X ⊂ L(λ)`.
    pub fn correlation(&self, xs: &[HalfInt]) -> Correlation {
        let value = self
            .members
            .iter()
            .filter(|(c, _)| xs.iter().all(|&x| c.contains(x)))
            .map(|(_, w)| w)
            .sum();
        Correlation { value, tail_bound: self.tail_bound() }
    }

    /// `Σ M_ν(λ)` over the enumerated `λ` with `x ∉ L(λ)`.
    pub fn hole_probability(&self, x: HalfInt) -> f64 {
        self.members.iter().filter(|(c, _)| !c.contains(x)).map(|(_, w)| w).sum()
    }
}

pub fn brute_force_correlation(xs: &[HalfInt], nu: f64, cutoff: usize) -> Result<Correlation> {
    Ok(PoissonizedEnsemble::new(nu, cutoff)?.correlation(xs))
}

/// `S^a(k, l) = sin(φ(k−l)) / (π(k−l))` with `φ = arccos(a/2)`; `φ/π` on the diagonal.
pub fn discrete_sine_kernel(k: i64, l: i64, a: f64) -> Result<f64> {
    if !(a.abs() < 2.0) {
        return Err(Error::InvalidParameter(format!("need |a| < 2, got {a}")));
    }
    let phi = (a / 2.0).acos();
    let d = (k - l) as f64;
    Ok(if k == l { phi / PI } else { (phi * d).sin() / (PI * d) })
}

/// Half-integer nearest to `t`; ties go down.
pub fn nearest_half_integer(t: f64) -> HalfInt {
    HalfInt::from_floor((t - 1.0).ceil() as i64)
}

/// Window half-width used by [`bulk_limit_check`].
pub const BULK_WINDOW: i64 = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BulkRow {
    pub nu: f64,
    pub x: HalfInt,
    pub max_error: f64,
    pub diagonal: f64,
}

/// For each `ν`, `max_{|k|,|l| ≤ 3} |J^ν(x+k, x+l) − S^a(k, l)|` at `x` the
/// half-integer nearest to `a√ν`.
pub fn bulk_limit_check(a: f64, nus: &[f64]) -> Result<Vec<BulkRow>> {
    discrete_sine_kernel(0, 0, a)?;
    nus.iter()
        .map(|&nu| {
            let x = nearest_half_integer(a * nu.sqrt());
            let reach = x.floor().unsigned_abs() as usize + BULK_WINDOW as usize + 1;
            let kernel = DiscreteBessel::new(nu, reach)?;
            let mut max_error: f64 = 0.0;
            for k in -BULK_WINDOW..=BULK_WINDOW {
                for l in -BULK_WINDOW..=BULK_WINDOW {
                    let j = kernel.eval(x.shift(k), x.shift(l))?;
                    max_error = max_error.max((j - discrete_sine_kernel(k, l, a)?).abs());
                }
            }
            Ok(BulkRow { nu, x, max_error, diagonal: kernel.eval(x, x)? })
        })
        .collect()
}

/// Lattice sites `−(w − ½), …, w − ½`.
pub fn window(w: i64) -> Vec<HalfInt> {
    (-w..w).map(HalfInt::from_floor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plancherel::plancherel_weight;

    fn h(d: i64) -> HalfInt {
        HalfInt::from_doubled(d).unwrap()
    }

    #[test]
    fn poissonized_weights() {
        assert!((poissonized_plancherel_weight(&Partition::empty(), 2.0).unwrap() - (-2.0f64).exp()).abs() < 1e-16);
        for n in 0..=10 {
            let s: f64 = partitions_of(n).iter().map(|l| poissonized_plancherel_weight(l, 2.0).unwrap()).sum();
            let p = (-2.0 + n as f64 * 2f64.ln() - ln_factorial(n)).exp();
            assert!((s - p).abs() < 1e-14 * p.max(1e-3), "n={n}");
            for l in partitions_of(n) {
                let expected = p * plancherel_weight(&l);
                assert!((poissonized_plancherel_weight(&l, 2.0).unwrap() - expected).abs() < 1e-14);
            }
        }
        let ens = PoissonizedEnsemble::new(2.0, 30).unwrap();
        let total = ens.correlation(&[]).value;
        assert!(total <= 1.0 + 1e-12 && total >= 1.0 - ens.tail_bound() - 1e-12);
        assert!(ens.tail_bound() < 1e-9);
    }

    #[test]
    fn poisson_tail_values() {
        assert!((poisson_tail(0, 1.0) - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!((poisson_tail(2, 3.0) - (1.0 - 8.5 * (-3.0f64).exp())).abs() < 1e-14);
    }

    #[test]
    fn kernel_symmetry_and_ratio_form() {
        let k = DiscreteBessel::new(2.0, 12).unwrap();
        for x in window(6) {
            for y in window(6) {
                let a = k.eval(x, y).unwrap();
                assert_eq!(a, k.eval(y, x).unwrap());
                if x != y {
                    assert!((a - k.eval_ratio(x, y).unwrap()).abs() < 1e-9, "{x} {y}");
                }
            }
            let d = k.eval(x, x).unwrap();
            assert!((0.0..=1.0).contains(&d));
        }
    }

    #[test]
    fn projection_property() {
        let nu = 2.0;
        let k = DiscreteBessel::new(nu, 60).unwrap();
        let zs = window(50);
        for x in window(6) {
            for y in window(6) {
                let s: f64 = zs.iter().map(|&z| k.eval(x, z).unwrap() * k.eval(z, y).unwrap()).sum();
                assert!((s - k.eval(x, y).unwrap()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn singletons_against_oracle() {
        let ens = PoissonizedEnsemble::new(2.0, 30).unwrap();
        let k = DiscreteBessel::new(2.0, 8).unwrap();
        for x in window(6) {
            let o = ens.correlation(&[x]).value;
            assert!((k.eval(x, x).unwrap() - o).abs() < 1e-6, "{x}");
        }
        let x = h(-1);
        let total = ens.correlation(&[]).value;
        assert!((ens.correlation(&[x]).value - (total - ens.hole_probability(x))).abs() < 1e-13);
    }

    #[test]
    fn sine_kernel() {
        assert!((discrete_sine_kernel(3, 3, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(discrete_sine_kernel(2, 0, 0.0).unwrap().abs() < 1e-16);
        assert_eq!(discrete_sine_kernel(5, 1, 0.7).unwrap(), discrete_sine_kernel(9, 5, 0.7).unwrap());
        assert_eq!(discrete_sine_kernel(5, 1, 0.7).unwrap(), discrete_sine_kernel(1, 5, 0.7).unwrap());
        assert!(discrete_sine_kernel(0, 0, 2.0).is_err());
        assert!(discrete_sine_kernel(0, 0, -2.5).is_err());
    }

    #[test]
    fn nearest_half_integers() {
        assert_eq!(nearest_half_integer(0.0), h(-1));
        assert_eq!(nearest_half_integer(0.3), h(1));
        assert_eq!(nearest_half_integer(5.0), h(9));
        assert_eq!(nearest_half_integer(5.2), h(11));
        assert_eq!(nearest_half_integer(-1.7), h(-3));
    }

    #[test]
    fn bulk_errors_decrease() {
        for a in [0.0, 0.5] {
            let rows = bulk_limit_check(a, &[100.0, 400.0, 1600.0]).unwrap();
            assert!(rows.windows(2).all(|w| w[1].max_error < w[0].max_error), "{rows:?}");
            assert!(rows.iter().all(|r| r.diagonal > 0.0 && r.diagonal <= 1.0));
        }
    }
}
