//! Quadrature helpers over the tanh-sinh rule of the `quadrature` crate.

/// `∫_a^b f` to the requested absolute tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    quadrature::double_exponential::integrate(f, a, b, tol).integral
}

/// Splits `[a, b]` into `pieces` equal parts; used for oscillatory integrands.
pub fn integrate_split<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, pieces: usize, tol: f64) -> f64 {
    let pieces = pieces.max(1);
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|k| integrate(&f, a + k as f64 * h, a + (k + 1) as f64 * h, tol / pieces as f64))
        .sum()
}
