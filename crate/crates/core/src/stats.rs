//! Small statistical toolkit for the Monte Carlo checks.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance.
pub fn variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

/// Standard error of the sample mean.
pub fn std_error(xs: &[f64]) -> f64 {
    (variance(xs) / xs.len() as f64).sqrt()
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TestOutcome {
    pub statistic: f64,
    pub p_value: f64,
}

impl TestOutcome {
    pub fn rejects_at(&self, level: f64) -> bool {
        self.p_value < level
    }
}

/// Kolmogorov survival function `Q(t) = 2 Σ_{k≥1} (−1)^{k−1} e^{−2k²t²}`.
pub fn kolmogorov_q(t: f64) -> f64 {
    if t < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let term = (-2.0 * (k * k) as f64 * t * t).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-17 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Two-sample Kolmogorov–Smirnov test with the asymptotic p-value
/// (Stephens' small-sample correction of the argument).
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> TestOutcome {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len(), y.len());
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let v = x[i].min(y[j]);
        while i < n && x[i] <= v {
            i += 1;
        }
        while j < m && y[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let en = ((n * m) as f64 / (n + m) as f64).sqrt();
    let p = kolmogorov_q((en + 0.12 + 0.11 / en) * d);
    TestOutcome { statistic: d, p_value: p }
}

/// Pearson chi-square goodness of fit. `expected` are probabilities summing to 1.
pub fn chi_square(observed: &[u64], expected: &[f64]) -> TestOutcome {
    assert_eq!(observed.len(), expected.len());
    let total: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dof = (observed.len() - 1) as f64;
    let p = if dof == 0.0 { 1.0 } else { 1.0 - ChiSquared::new(dof).unwrap().cdf(stat) };
    TestOutcome { statistic: stat, p_value: p }
}

/// Chi-square after merging every cell with expected count below `min_expected`
/// into a single pooled cell (dropped if it is still too small).
pub fn chi_square_pooled(observed: &[u64], expected: &[f64], min_expected: f64) -> TestOutcome {
    let total: u64 = observed.iter().sum();
    let (mut obs, mut exp) = (Vec::new(), Vec::new());
    let (mut pool_o, mut pool_e) = (0u64, 0.0);
    for (&o, &p) in observed.iter().zip(expected) {
        if p * total as f64 >= min_expected {
            obs.push(o);
            exp.push(p);
        } else {
            pool_o += o;
            pool_e += p;
        }
    }
    if pool_e * total as f64 >= min_expected {
        obs.push(pool_o);
        exp.push(pool_e);
    } else if let Some(last) = exp.last_mut() {
        *last += pool_e;
        *obs.last_mut().unwrap() += pool_o;
    }
    chi_square(&obs, &exp)
}

/// Jarque–Bera normality test, chi-square with 2 degrees of freedom.
pub fn jarque_bera(xs: &[f64]) -> TestOutcome {
    let n = xs.len() as f64;
    let m = mean(xs);
    let m2 = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / n;
    let m3 = xs.iter().map(|x| (x - m).powi(3)).sum::<f64>() / n;
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / n;
    let skew = m3 / m2.powf(1.5);
    let kurt = m4 / (m2 * m2) - 3.0;
    let stat = n / 6.0 * (skew * skew + kurt * kurt / 4.0);
    TestOutcome { statistic: stat, p_value: 1.0 - ChiSquared::new(2.0).unwrap().cdf(stat) }
}

/// Fixed-width histogram on `[lo, hi]`, the last bin closed; values outside are dropped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn new(samples: &[f64], lo: f64, hi: f64, bins: usize) -> Option<Self> {
        if bins == 0 || samples.is_empty() || !(hi > lo) {
            return None;
        }
        let mut counts = vec![0u64; bins];
        let width = (hi - lo) / bins as f64;
        for &x in samples {
            if x >= lo && x <= hi {
                let k = (((x - lo) / width) as usize).min(bins - 1);
                counts[k] += 1;
            }
        }
        Some(Histogram { lo, hi, counts, total: samples.len() as u64 })
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo) / self.counts.len() as f64
    }

    /// Rows `(bin_lo, bin_hi, count, density)`; density is count / (total · width).
    pub fn rows(&self) -> Vec<(f64, f64, u64, f64)> {
        let w = self.width();
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let a = self.lo + k as f64 * w;
                (a, a + w, c, c as f64 / (self.total as f64 * w))
            })
            .collect()
    }
}
