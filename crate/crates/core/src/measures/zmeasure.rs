use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, partitions_in_box, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::plancherel::plancherel_weight;

/// `(x)_λ = ∏_{(i,j) ∈ λ} (x + j − i)`.
pub fn pochhammer_box(x: f64, lambda: &Partition) -> f64 {
    lambda.contents().map(|c| x + c as f64).product()
}

pub fn pochhammer_box_complex(x: Complex64, lambda: &Partition) -> Complex64 {
    lambda.contents().map(|c| x + c as f64).product()
}

pub fn pochhammer_box_exact(x: &BigRational, lambda: &Partition) -> BigRational {
    lambda.contents().fold(BigRational::one(), |acc, c| acc * (x + BigRational::from_integer(c.into())))
}

/// Rising factorial `(x)_n`.
pub fn rising(x: f64, n: usize) -> f64 {
    (0..n).map(|k| x + k as f64).product()
}

/// Largest diagram size used to screen admissibility.
pub const ADMISSIBILITY_DEPTH: usize = 10;

/// The pair `(z, z′)`. Weights need `zz′` real; admissibility (nonnegative
/// weights) is a separate, optional check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZParams {
    pub z: Complex64,
    pub zp: Complex64,
}

impl ZParams {
    pub fn new(z: Complex64, zp: Complex64) -> Result<Self> {
        let p = z * zp;
        if p.im.abs() > 1e-12 * p.norm().max(1.0) {
            return Err(Error::InvalidParameter(format!("z·z′ = {p} is not real")));
        }
        Ok(ZParams { z, zp })
    }

    pub fn real(z: f64, zp: f64) -> Self {
        ZParams { z: Complex64::new(z, 0.0), zp: Complex64::new(zp, 0.0) }
    }

    /// `z′ = z̄`.
    pub fn principal(z: Complex64) -> Result<Self> {
        if z == Complex64::zero() {
            return Err(Error::InvalidParameter("z = 0 gives the trivial measure".into()));
        }
        Ok(ZParams { z, zp: z.conj() })
    }

    pub fn product(&self) -> f64 {
        (self.z * self.zp).re
    }

    /// `(z)_λ (z′)_λ`, real whenever `zz′` is real and the pair is principal or real.
    pub fn box_product(&self, lambda: &Partition) -> f64 {
        (pochhammer_box_complex(self.z, lambda) * pochhammer_box_complex(self.zp, lambda)).re
    }

    /// Principal pairs pass; other pairs must be real with `zz′ > 0` and
    /// `(z)_λ (z′)_λ ≥ 0` for every `|λ| ≤ 10`.
    pub fn is_admissible(&self) -> bool {
        if self.zp == self.z.conj() && self.z != Complex64::zero() {
            return true;
        }
        if self.z.im != 0.0 || self.zp.im != 0.0 || self.product() <= 0.0 {
            return false;
        }
        (0..=ADMISSIBILITY_DEPTH).all(|n| partitions_of(n).iter().all(|l| self.box_product(l) >= 0.0))
    }

    pub fn admissible(z: Complex64, zp: Complex64) -> Result<Self> {
        let p = ZParams::new(z, zp)?;
        if !p.is_admissible() {
            return Err(Error::InvalidParameter(format!("(z, z′) = ({z}, {zp}) fails the admissibility screen")));
        }
        Ok(p)
    }
}

fn check_denominator(c: f64, n: usize) -> Result<()> {
    if (0..n).any(|k| c + k as f64 == 0.0) {
        return Err(Error::DivisionByZero(format!("(zz′)_{n} vanishes at zz′ = {c}")));
    }
    Ok(())
}

/// `(z)_λ (z′)_λ / (zz′)_n · (dim λ)² / n!`.
pub fn zmeasure_weight(lambda: &Partition, p: &ZParams) -> Result<f64> {
    let n = lambda.size();
    let c = p.product();
    check_denominator(c, n)?;
    Ok(p.box_product(lambda) / rising(c, n) * plancherel_weight(lambda))
}

pub fn zmeasure_weight_exact(lambda: &Partition, z: &BigRational, zp: &BigRational) -> Result<BigRational> {
    let n = lambda.size();
    let c = z * zp;
    let den = (0..n).fold(BigRational::one(), |acc, k| acc * (&c + BigRational::from_integer(k.into())));
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("(zz′)_{n} vanishes at zz′ = {c}")));
    }
    let d = BigInt::from(lambda.dim());
    let planch = BigRational::new(&d * &d, BigInt::from(factorial(n)));
    Ok(pochhammer_box_exact(z, lambda) * pochhammer_box_exact(zp, lambda) / den * planch)
}

fn check_xi(xi: f64) -> Result<()> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < ξ < 1, got {xi}")));
    }
    Ok(())
}

/// `(1−ξ)^{zz′} ξ^{|λ|} (z)_λ (z′)_λ (dim λ / |λ|!)²`.
pub fn mixed_zmeasure_weight(lambda: &Partition, p: &ZParams, xi: f64) -> Result<f64> {
    check_xi(xi)?;
    let n = lambda.size();
    let c = p.product();
    // (dim λ/n!)² = plancherel(λ)/n!
    let log_scale = c * (-xi).ln_1p() + n as f64 * xi.ln() - crate::combinat::ln_factorial(n);
    Ok(log_scale.exp() * p.box_product(lambda) * plancherel_weight(lambda))
}

/// `P(N > l)` for `N` negative binomial with `P(N = n) = (1−ξ)^c (c)_n ξ^n / n!`.
pub fn negative_binomial_tail(l: usize, c: f64, xi: f64) -> f64 {
    let mut term = (c * (-xi).ln_1p()).exp();
    for n in 0..=l {
        term *= (c + n as f64) * xi / (n + 1) as f64;
    }
    let mut sum = 0.0;
    let mut n = l + 1;
    while term > 1e-300 && (term > 1e-18 * sum || (n as f64) < c * xi / (1.0 - xi)) {
        sum += term;
        term *= (c + n as f64) * xi / (n + 1) as f64;
        n += 1;
    }
    sum
}

/// `(l_1, …, l_N) = (λ_1 + N − 1, …, λ_N)`.
pub fn meixner_coordinates(lambda: &Partition, n: usize) -> Vec<usize> {
    (1..=n).map(|i| lambda.part(i) + n - i).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeixnerReport {
    pub particles: usize,
    pub b: f64,
    pub xi: f64,
    pub cutoff: usize,
    pub diagrams: usize,
    /// `(max − min) / max` of the ratio over `Y(N)`.
    pub relative_spread: f64,
    pub support_confined: bool,
    pub offending: Option<Partition>,
}

impl MeixnerReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.relative_spread < tol && self.support_confined
    }
}

/// Compares the mixed z-measure with `z = N`, `z′ = N + b − 1` against the
/// `N`-particle weight `∏_{i<j} (l_i − l_j)² ∏_i (b)_{l_i} ξ^{l_i} / l_i!`.
pub fn meixner_check(particles: usize, b: f64, xi: f64, cutoff: usize) -> Result<MeixnerReport> {
    if particles == 0 || cutoff + 1 < particles || !(b > 0.0) {
        return Err(Error::InvalidParameter("need N ≥ 1, cutoff ≥ N − 1 and b > 0".into()));
    }
    let n = particles;
    let p = ZParams::real(n as f64, n as f64 + b - 1.0);
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    let mut diagrams = 0;
    let mut offending = None;
    for l in partitions_in_box(n, cutoff + 1 - n) {
        let ls = meixner_coordinates(&l, n);
        let mut ensemble = 1.0;
        for i in 0..n {
            for j in i + 1..n {
                ensemble *= ((ls[i] - ls[j]) as f64).powi(2);
            }
            let li = ls[i];
            ensemble *= over_factorial(rising(b, li) * xi.powi(li as i32), li);
        }
        let r = mixed_zmeasure_weight(&l, &p, xi)? / ensemble;
        if !(r > 0.0) && offending.is_none() {
            offending = Some(l.clone());
        }
        lo = lo.min(r);
        hi = hi.max(r);
        diagrams += 1;
    }
    let mut support_confined = true;
    for size in 0..=cutoff {
        for l in partitions_of(size).into_iter().filter(|l| l.length() > n) {
            if mixed_zmeasure_weight(&l, &p, xi)? != 0.0 {
                support_confined = false;
                offending.get_or_insert(l);
            }
        }
    }
    let relative_spread = if hi > 0.0 { (hi - lo) / hi } else { f64::INFINITY };
    Ok(MeixnerReport { particles, b, xi, cutoff, diagrams, relative_spread, support_confined, offending })
}

fn over_factorial(x: f64, n: usize) -> f64 {
    x / (1..=n).map(|k| k as f64).product::<f64>()
}
