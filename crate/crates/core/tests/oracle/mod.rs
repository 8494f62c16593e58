//! Independent reference computations used by the integration tests. Nothing
//! here calls into the library except to convert to and from its types.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// Partitions of `n` as weakly decreasing vectors, generated by recursion on the largest part.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

pub fn hooks(parts: &[usize]) -> Vec<usize> {
    let conj = conjugate(parts);
    let mut h = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            h.push(p - j + conj[j] - i - 1);
        }
    }
    h
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, k| a * k)
}

/// Hook length formula.
pub fn dim(parts: &[usize]) -> BigUint {
    let n: usize = parts.iter().sum();
    factorial(n) / hooks(parts).iter().fold(BigUint::one(), |a, &h| a * h)
}

/// `ln(dim / n!) = −Σ ln(hook)`.
pub fn ln_dim_over_factorial(parts: &[usize]) -> f64 {
    -hooks(parts).iter().map(|&h| (h as f64).ln()).sum::<f64>()
}

pub fn contents(parts: &[usize]) -> Vec<i64> {
    parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| j as i64 - i as i64)).collect()
}

pub fn plancherel(parts: &[usize]) -> f64 {
    let n: usize = parts.iter().sum();
    (2.0 * ln_dim_over_factorial(parts) + ln_fact(n)).exp()
}

pub fn plancherel_exact(parts: &[usize]) -> BigRational {
    let n: usize = parts.iter().sum();
    let d = BigInt::from(dim(parts));
    BigRational::new(&d * &d, BigInt::from(factorial(n)))
}

pub fn ln_fact(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// `e^{−ν} ν^n (dim λ / n!)²`.
pub fn poissonized_plancherel(parts: &[usize], nu: f64) -> f64 {
    let n: usize = parts.iter().sum();
    (-nu + n as f64 * nu.ln() + 2.0 * ln_dim_over_factorial(parts)).exp()
}

/// `(x)_λ = ∏ (x + content)`.
pub fn box_pochhammer(x: f64, parts: &[usize]) -> f64 {
    contents(parts).iter().map(|&c| x + c as f64).product()
}

pub fn box_pochhammer_exact(x: &BigRational, parts: &[usize]) -> BigRational {
    contents(parts).iter().fold(BigRational::one(), |a, &c| a * (x + BigRational::from_integer(c.into())))
}

/// `(1−ξ)^{zz′} ξ^n (z)_λ (z′)_λ (dim λ/n!)²`.
pub fn mixed_z(parts: &[usize], z: f64, zp: f64, xi: f64) -> f64 {
    let n: usize = parts.iter().sum();
    let scale = (z * zp * (1.0 - xi).ln() + n as f64 * xi.ln() + 2.0 * ln_dim_over_factorial(parts)).exp();
    scale * box_pochhammer(z, parts) * box_pochhammer(zp, parts)
}

/// `(z)_λ (z′)_λ (dim λ)² / ((zz′)_n n!)` in exact arithmetic.
pub fn z_measure_exact(parts: &[usize], z: &BigRational, zp: &BigRational) -> BigRational {
    let n: usize = parts.iter().sum();
    let c = z * zp;
    let rising = (0..n).fold(BigRational::one(), |a, k| a * (&c + BigRational::from_integer(k.into())));
    box_pochhammer_exact(z, parts) * box_pochhammer_exact(zp, parts) * plancherel_exact(parts) / rising
}

/// Every permutation of `0..n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

/// Cycle lengths of `i ↦ images[i]`, sorted decreasingly.
pub fn cycle_lengths(images: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = images[i] as usize;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Longest strictly increasing subsequence by quadratic dynamic programming.
pub fn lis(xs: &[u32]) -> usize {
    let mut best = vec![1usize; xs.len()];
    for i in 0..xs.len() {
        for j in 0..i {
            if xs[j] < xs[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Maximal up-right path sum, by recursion over the last step.
pub fn lpp(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> u64) -> u64 {
    let mut g = vec![vec![0u64; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            let up = if i > 0 { g[i - 1][j] } else { 0 };
            let left = if j > 0 { g[i][j - 1] } else { 0 };
            g[i][j] = entry(i, j) + up.max(left);
        }
    }
    if rows == 0 || cols == 0 {
        0
    } else {
        g[rows - 1][cols - 1]
    }
}

/// Composite Simpson rule with `2m` panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, m: usize) -> f64 {
    let h = (b - a) / (2 * m) as f64;
    let mut s = f(a) + f(b);
    for i in 1..2 * m {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

pub fn omega(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        x.abs()
    } else {
        2.0 / std::f64::consts::PI * (x * (x / 2.0).asin() + (4.0 - x * x).sqrt())
    }
}

/// Russian-coordinate profile at an integer site: `u + 2 #{i ≥ 1 : λ_i − i ≥ u}`.
pub fn profile_at(parts: &[usize], u: i64) -> i64 {
    let depth = parts.len() as i64 + u.abs() + 2;
    let count = (1..=depth).filter(|&i| {
        let p = parts.get(i as usize - 1).copied().unwrap_or(0) as i64;
        p - i >= u
    });
    u + 2 * count.count() as i64
}

/// Profile rescaled by `√n`, linear between integer sites.
pub fn rescaled_profile(parts: &[usize], x: f64) -> f64 {
    let n: usize = parts.iter().sum();
    let s = (n as f64).sqrt();
    let u = x * s;
    let lo = u.floor();
    let t = u - lo;
    let (a, b) = (profile_at(parts, lo as i64) as f64, profile_at(parts, lo as i64 + 1) as f64);
    ((1.0 - t) * a + t * b) / s
}

/// `sup |λ̄ − Ω|`. The profile has slope ±1 between integer sites and
/// `|Ω′| < 1`, so the supremum sits at a site or at `±2`.
pub fn sup_distance(parts: &[usize]) -> f64 {
    let n: usize = parts.iter().sum();
    let s = (n as f64).sqrt();
    let reach = (3.0 * s).ceil() as i64 + parts.len() as i64 + parts.first().copied().unwrap_or(0) as i64;
    let mut best: f64 = 0.0;
    for u in -reach..=reach {
        let x = u as f64 / s;
        best = best.max((profile_at(parts, u) as f64 / s - omega(x)).abs());
    }
    for x in [-2.0, 2.0] {
        best = best.max((rescaled_profile(parts, x) - omega(x)).abs());
    }
    best
}

/// `∫ x² (λ̄ − |x|) dx`, exact: on each unit piece the integrand is a cubic, where Simpson is exact.
pub fn second_moment_excess(parts: &[usize]) -> f64 {
    let n: usize = parts.iter().sum();
    let reach = parts.len().max(parts.first().copied().unwrap_or(0)) as i64 + 1;
    let mut total = 0.0;
    for u in -reach..reach {
        let (a, b) = ((profile_at(parts, u) - u.abs()) as f64, (profile_at(parts, u + 1) - (u + 1).abs()) as f64);
        let f = |t: f64| {
            let x = u as f64 + t;
            x * x * ((1.0 - t) * a + t * b)
        };
        total += (f(0.0) + 4.0 * f(0.5) + f(1.0)) / 6.0;
    }
    // x = u/√n and λ̄ − |x| = (ω − |u|)/√n
    total / (n as f64).powi(2)
}

/// `∫ x² (Ω − |x|) dx` by Simpson after the substitution `x = 2 cos θ`, which removes the square-root edges.
pub fn omega_second_moment_excess() -> f64 {
    simpson(|t: f64| {
        let x = 2.0 * t.cos();
        x * x * (omega(x) - x.abs()) * 2.0 * t.sin()
    }, 0.0, std::f64::consts::PI, 200_000)
}
