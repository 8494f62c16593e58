use serde::Serialize;

use super::partition::Partition;
use crate::error::{Error, Result};

/// The boundary of a diagram drawn in rotated coordinates `x = s − r`,
/// `y = r + s`, as the graph of a piecewise linear function.
///
/// Breakpoints alternate between local minima (contents of addable cells)
/// and local maxima (contents of removable boxes), starting and ending with
/// a minimum. With `scale = c` the stored function is `c·λ(x/c)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Profile {
    breaks: Vec<i64>,
    #[serde(skip)]
    values: Vec<i64>,
    scale: f64,
}

impl Profile {
    pub fn new(lambda: &Partition, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidParameter(format!("profile scale must be positive, got {scale}")));
        }
        let mut minima: Vec<i64> = lambda.addable_corners().into_iter().map(|(i, j)| j as i64 - i as i64).collect();
        let mut maxima: Vec<i64> = lambda.removable_corners().into_iter().map(|(i, j)| j as i64 - i as i64).collect();
        minima.reverse();
        maxima.reverse();
        let mut breaks = Vec::with_capacity(minima.len() + maxima.len());
        for (k, &m) in minima.iter().enumerate() {
            breaks.push(m);
            if let Some(&y) = maxima.get(k) {
                breaks.push(y);
            }
        }
        let values = break_values(&breaks);
        Ok(Profile { breaks, values, scale })
    }

    /// The rescaled profile `λ̄(x) = n^{−1/2} λ(√n x)`.
    pub fn rescaled(lambda: &Partition) -> Result<Self> {
        let n = lambda.size();
        if n == 0 {
            return Err(Error::InvalidParameter("the rescaled profile of the empty diagram is undefined".into()));
        }
        Profile::new(lambda, 1.0 / (n as f64).sqrt())
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Breakpoint abscissae on the scaled axis, increasing.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.breaks.iter().map(|&b| b as f64 * self.scale).collect()
    }

    pub fn minima(&self) -> Vec<f64> {
        self.breakpoints().into_iter().step_by(2).collect()
    }

    pub fn maxima(&self) -> Vec<f64> {
        self.breakpoints().into_iter().skip(1).step_by(2).collect()
    }

    /// `c·λ(x/c)`.
    pub fn evaluate(&self, x: f64) -> f64 {
        let u = x / self.scale;
        let first = self.breaks[0] as f64;
        let last = *self.breaks.last().unwrap() as f64;
        if u <= first || u >= last {
            return x.abs();
        }
        let k = self.breaks.partition_point(|&b| (b as f64) <= u) - 1;
        let y0 = self.values[k] as f64;
        let du = u - self.breaks[k] as f64;
        let slope = if k % 2 == 0 { 1.0 } else { -1.0 };
        (y0 + slope * du) * self.scale
    }

    /// Linear pieces `(a, b, α, β)` with `c·λ(x/c) − |x| = α + βx` on `[a, b]`.
    fn excess_pieces(&self) -> Vec<(f64, f64, f64, f64)> {
        let ys = &self.values;
        let c = self.scale;
        let mut out = Vec::new();
        for k in 0..self.breaks.len().saturating_sub(1) {
            let (u0, u1) = (self.breaks[k] as f64, self.breaks[k + 1] as f64);
            let slope = if k % 2 == 0 { 1.0 } else { -1.0 };
            // on the scaled axis the value is c·(y_k + slope·(x/c − u_k)) = c·y_k − slope·c·u_k + slope·x
            let base = c * ys[k] as f64 - slope * c * u0;
            let (a, b) = (u0 * c, u1 * c);
            let mut push = |lo: f64, hi: f64, sign: f64| {
                if hi > lo {
                    out.push((lo, hi, base, slope - sign));
                }
            };
            if a < 0.0 && b > 0.0 {
                push(a, 0.0, -1.0);
                push(0.0, b, 1.0);
            } else {
                push(a, b, if b <= 0.0 { -1.0 } else { 1.0 });
            }
        }
        out
    }

    /// Area between the graph and `y = |x|`; equals `2|λ|·scale²`.
    pub fn area_above_abs(&self) -> f64 {
        self.integrate_against(&[1.0])
    }

    /// `∫ φ(x) (λ̄(x) − |x|) dx` for a polynomial `φ(x) = Σ coeffs[k] x^k`, exactly
    /// up to rounding: the integrand is a polynomial on each linear piece.
    pub fn integrate_against(&self, coeffs: &[f64]) -> f64 {
        self.excess_pieces()
            .into_iter()
            .map(|(a, b, alpha, beta)| {
                // ∫_a^b (α + βx) Σ c_k x^k dx = Σ c_k [α (b^{k+1} − a^{k+1})/(k+1) + β (b^{k+2} − a^{k+2})/(k+2)]
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, &ck)| {
                        let p1 = (k + 1) as i32;
                        let p2 = (k + 2) as i32;
                        ck * (alpha * (b.powi(p1) - a.powi(p1)) / p1 as f64 + beta * (b.powi(p2) - a.powi(p2)) / p2 as f64)
                    })
                    .sum::<f64>()
            })
            .sum()
    }

    /// Outside this interval the profile coincides with `|x|`.
    pub fn support(&self) -> (f64, f64) {
        (self.breaks[0] as f64 * self.scale, *self.breaks.last().unwrap() as f64 * self.scale)
    }
}

fn break_values(breaks: &[i64]) -> Vec<i64> {
    // start on y = −x at the first minimum; slopes alternate +1, −1
    let mut ys = Vec::with_capacity(breaks.len());
    let mut y = -breaks[0];
    ys.push(y);
    for w in 1..breaks.len() {
        let dx = breaks[w] - breaks[w - 1];
        y += if w % 2 == 1 { dx } else { -dx };
        ys.push(y);
    }
    ys
}
