//! Bessel functions `J_α(z)` of integer and half-integer order by Miller's
//! backward recurrence.
//!
//! The recurrence `J_{α+k−1} = (2(α+k)/z) J_{α+k} − J_{α+k+1}` is run downward
//! from a high starting order with arbitrary seed values and normalized by
//! the Neumann-type identity
//! `(z/2)^α = Σ_{k≥0} (α+2k) Γ(α+k)/k! · J_{α+2k}(z)`,
//! which for `α = 0` reads `J_0 + 2 Σ_{k≥1} J_{2k} = 1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest starting order the recurrence may use.
pub const MAX_DEPTH: usize = 200_000;

const AGREEMENT: f64 = 1e-14;

/// `J_{α+k}(z)` for `k = 0..=max`, with `α ∈ {0, ½}` given doubled.
fn miller(alpha2: i64, z: f64, max: usize, start: usize) -> Vec<f64> {
    let alpha = alpha2 as f64 / 2.0;
    let mut f = vec![0.0; start + 2];
    f[start] = 1e-30;
    for k in (1..=start).rev() {
        f[k - 1] = 2.0 * (alpha + k as f64) / z * f[k] - f[k + 1];
        if f[k - 1].abs() > 1e250 {
            f[k - 1..].iter_mut().for_each(|v| *v *= 1e-250);
        }
    }
    let norm: f64 = if alpha2 == 0 {
        f[0] + 2.0 * f.iter().skip(2).step_by(2).sum::<f64>()
    } else {
        // g_k = Γ(½+k)/k!, starting from Γ(½) = √π
        let mut g = PI.sqrt();
        let mut s = 0.0;
        for k in 0..=start / 2 {
            s += (alpha + 2.0 * k as f64) * g * f[2 * k];
            g *= (alpha + k as f64) / (k + 1) as f64;
        }
        s / (z / 2.0).powf(alpha)
    };
    f.truncate(max + 1);
    f.iter_mut().for_each(|v| *v /= norm);
    f
}

fn check_z(z: f64) -> Result<()> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::InvalidParameter(format!("Bessel argument must be positive, got {z}")));
    }
    Ok(())
}

/// Converged Miller values: the starting order is raised until two runs agree.
fn converged(alpha2: i64, z: f64, max: usize) -> Result<Vec<f64>> {
    let mut start = max + z.ceil() as usize + 20 + 4 * z.cbrt().ceil() as usize;
    let mut prev = miller(alpha2, z, max, start);
    loop {
        let next_start = start + start / 2 + 20;
        if next_start > MAX_DEPTH {
            return Err(Error::NonConvergence { depth: MAX_DEPTH });
        }
        let next = miller(alpha2, z, max, next_start);
        let diff = prev.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if diff < AGREEMENT {
            return Ok(next);
        }
        prev = next;
        start = next_start;
    }
}

/// `J_m(z)` for integer `|m| ≤ max`.
#[derive(Debug, Clone)]
pub struct BesselTable {
    z: f64,
    values: Vec<f64>,
}

impl BesselTable {
    pub fn new(z: f64, max: usize) -> Result<Self> {
        check_z(z)?;
        Ok(BesselTable { z, values: converged(0, z, max)? })
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    /// `J_m(z)`, using `J_{−m} = (−1)^m J_m`; zero past the table, where the
    /// values are below the recurrence accuracy anyway.
    pub fn get(&self, m: i64) -> f64 {
        let v = self.values.get(m.unsigned_abs() as usize).copied().unwrap_or(0.0);
        if m < 0 && m % 2 != 0 {
            -v
        } else {
            v
        }
    }
}

/// `J_{order}(z)` for an integer or half-integer order given doubled.
pub fn bessel_j(twice_order: i64, z: f64) -> Result<f64> {
    check_z(z)?;
    let k = (twice_order.unsigned_abs() / 2) as usize;
    if twice_order % 2 == 0 {
        return Ok(BesselTable::new(z, k)?.get(twice_order / 2));
    }
    let up = converged(1, z, k.max(1))?;
    if twice_order > 0 {
        return Ok(up[k]);
    }
    // negative half-integer orders: J_{ν−1} = (2ν/z) J_ν − J_{ν+1}, run downward from ν = ½
    let (mut hi, mut cur) = (up[1], up[0]);
    let mut nu = 0.5;
    for _ in 0..=k {
        let next = 2.0 * nu / z * cur - hi;
        hi = cur;
        cur = next;
        nu -= 1.0;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integer_closed_forms() {
        for z in [1.0f64, 2.0, 5.0] {
            let c = (2.0 / (PI * z)).sqrt();
            assert!((bessel_j(1, z).unwrap() - c * z.sin()).abs() < 1e-12);
            assert!((bessel_j(-1, z).unwrap() - c * z.cos()).abs() < 1e-12);
            // J_{3/2} = c (sin z / z − cos z), J_{−3/2} = −c (cos z / z + sin z)
            assert!((bessel_j(3, z).unwrap() - c * (z.sin() / z - z.cos())).abs() < 1e-12);
            assert!((bessel_j(-3, z).unwrap() + c * (z.cos() / z + z.sin())).abs() < 1e-12);
        }
    }

    #[test]
    fn integer_reference_values() {
        // tabulated: J_0(1), J_1(1), J_5(10), J_0(2.404825557695773) ≈ 0
        assert!((bessel_j(0, 1.0).unwrap() - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((bessel_j(2, 1.0).unwrap() - 0.440_050_585_744_933_5).abs() < 1e-14);
        assert!((bessel_j(10, 10.0).unwrap() - (-0.234_061_528_186_793_6)).abs() < 1e-13);
        assert!(bessel_j(0, 2.404_825_557_695_773).unwrap().abs() < 1e-13);
        assert!((bessel_j(-2, 1.0).unwrap() + bessel_j(2, 1.0).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn recurrence_residual() {
        for z in [0.3, 2.0 * 2f64.sqrt(), 20.0, 80.0] {
            let t = BesselTable::new(z, 150).unwrap();
            for m in -140i64..140 {
                let r = t.get(m - 1) + t.get(m + 1) - 2.0 * m as f64 / z * t.get(m);
                assert!(r.abs() < 1e-10, "z={z} m={m}: {r}");
            }
            let sq: f64 = (-150i64..=150).map(|m| t.get(m).powi(2)).sum();
            assert!((sq - 1.0).abs() < 1e-12);
        }
        for z in [1.0, 7.5] {
            for m in -8i64..8 {
                let o = 2 * m + 1;
                let (a, b, c) = (bessel_j(o - 2, z).unwrap(), bessel_j(o + 2, z).unwrap(), bessel_j(o, z).unwrap());
                // negative half-integer orders grow fast, so the residual is taken relative to the largest term
                let r = (a + b - o as f64 / z * c) / a.abs().max(b.abs()).max(1.0);
                assert!(r.abs() < 1e-10, "z={z} o={o}: {r}");
            }
        }
    }

    #[test]
    fn rejects_bad_argument() {
        assert!(bessel_j(0, 0.0).is_err());
        assert!(BesselTable::new(-1.0, 3).is_err());
    }
}
