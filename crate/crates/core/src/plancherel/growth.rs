use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use super::tableau::rsk_shape;
use crate::combinat::{all_permutations, factorial, ln_factorial, Partition, Permutation};

/// `(dim λ)² / n!`.
pub fn plancherel_weight(lambda: &Partition) -> f64 {
    (2.0 * lambda.ln_dim() - ln_factorial(lambda.size())).exp()
}

pub fn plancherel_weight_exact(lambda: &Partition) -> BigRational {
    let d = BigInt::from(lambda.dim());
    BigRational::new(&d * &d, BigInt::from(factorial(lambda.size())))
}

/// Shape law of RSK applied to every permutation of `[n]`, each with mass `1/n!`.
pub fn rsk_pushforward_exact(n: usize) -> HashMap<Partition, BigRational> {
    let unit = BigRational::new(BigInt::from(1), BigInt::from(factorial(n)));
    let mut law: HashMap<Partition, BigRational> = HashMap::new();
    for s in all_permutations(n) {
        *law.entry(rsk_shape(s.images())).or_default() += &unit;
    }
    law
}

pub fn sample_plancherel_rsk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let mut word: Vec<u32> = (0..n as u32).collect();
    word.shuffle(rng);
    rsk_shape(&word)
}

/// Plancherel growth probabilities: for each addable row `i` of `λ ⊢ m`, the
/// chance `dim(λ + □_i) / ((m+1) dim λ)` of adding a box there.
///
/// With addable contents `x_0 < … < x_d` and removable contents
/// `y_1 < … < y_d` (they interlace), the chance at `x_k` is
/// `∏_i (x_k − y_i) / ∏_{i≠k} (x_k − x_i)`. Factors are multiplied in pairs to
/// keep intermediate values near 1.
pub fn growth_probabilities(parts: &[usize]) -> Vec<(usize, f64)> {
    let len = parts.len();
    let part = |i: usize| if i >= 1 && i <= len { parts[i - 1] } else { 0 };
    let mut add: Vec<(usize, i64)> = Vec::new();
    let mut rem: Vec<i64> = Vec::new();
    for i in 1..=len + 1 {
        if i == 1 || part(i) < part(i - 1) {
            add.push((i, part(i) as i64 + 1 - i as i64));
        }
        if i <= len && part(i) > part(i + 1) {
            rem.push(part(i) as i64 - i as i64);
        }
    }
    let xs: Vec<i64> = add.iter().map(|&(_, c)| c).collect();
    add.iter()
        .enumerate()
        .map(|(k, &(row, xk))| {
            let mut p = 1.0;
            let mut others = xs.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x);
            for &y in &rem {
                let x = others.next().expect("one more addable than removable");
                p *= (xk - y) as f64 / (xk - x) as f64;
            }
            (row, p)
        })
        .collect()
}

/// Grows a Plancherel-distributed diagram box by box with the exact growth
/// probabilities of [`growth_probabilities`].
pub fn sample_plancherel_hookwalk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let mut parts: Vec<usize> = Vec::new();
    for _ in 0..n {
        let probs = growth_probabilities(&parts);
        let mut u: f64 = rng.gen();
        let mut row = probs.last().expect("there is always an addable cell").0;
        for &(r, p) in &probs {
            if u < p {
                row = r;
                break;
            }
            u -= p;
        }
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
    }
    Partition::new(parts).expect("growth keeps a diagram")
}

/// Number of involutions of `[n]`, `T(n) = T(n−1) + (n−1) T(n−2)`.
pub fn involution_count(n: usize) -> num_bigint::BigUint {
    let (mut a, mut b) = (num_bigint::BigUint::from(1u32), num_bigint::BigUint::from(1u32));
    for m in 2..=n {
        let next = &b + &a * (m - 1);
        a = std::mem::replace(&mut b, next);
    }
    b
}

/// Uniform involution of `[n]`.
///
/// Any remaining element out of `m` is fixed with probability
/// `T(m−1)/T(m) = 1/q_m`, where `q_m = 1 + (m−1)/q_{m−1}`; otherwise it is
/// paired with one of the other `m − 1` uniformly.
pub fn sample_involution<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut q = vec![1.0f64; n + 1];
    for m in 2..=n {
        q[m] = 1.0 + (m - 1) as f64 / q[m - 1];
    }
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut remaining: Vec<u32> = (0..n as u32).collect();
    while let Some(top) = remaining.pop() {
        let m = remaining.len() + 1;
        if rng.gen::<f64>() < 1.0 / q[m] {
            continue;
        }
        let j = rng.gen_range(0..remaining.len());
        let partner = remaining.swap_remove(j);
        images[top as usize] = partner;
        images[partner as usize] = top;
    }
    Permutation::from_images(images).expect("pairs and fixed points form a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use crate::rng::{chunked, substream};
    use crate::stats::{chi_square, mean, std_error};
    use num_traits::{One, ToPrimitive};

    #[test]
    fn rsk_pushforward_is_plancherel() {
        for n in 0..=7 {
            let law = rsk_pushforward_exact(n);
            let parts = partitions_of(n);
            assert_eq!(law.len(), parts.len());
            for l in parts {
                assert_eq!(law[&l], plancherel_weight_exact(&l));
                assert_eq!(law[&l], law[&l.transpose()]);
            }
        }
    }

    #[test]
    fn growth_probabilities_are_dimension_ratios() {
        for m in 0..=8 {
            for l in partitions_of(m) {
                let probs = growth_probabilities(l.parts());
                let total: f64 = probs.iter().map(|p| p.1).sum();
                assert!((total - 1.0).abs() < 1e-12);
                for (row, p) in probs {
                    let big = l.add_box(row).unwrap();
                    let exact = (big.dim().to_f64().unwrap()) / ((m + 1) as f64 * l.dim().to_f64().unwrap());
                    assert!((p - exact).abs() < 1e-12, "{l} row {row}");
                }
            }
        }
    }

    #[test]
    fn growth_two_boxes_is_fair() {
        let probs = growth_probabilities(&[1]);
        assert_eq!(probs, vec![(1, 0.5), (2, 0.5)]);
        let mut rng = substream(0, "one", 0);
        assert_eq!(sample_plancherel_hookwalk(1, &mut rng), Partition::row(1));
        assert_eq!(sample_plancherel_rsk(1, &mut rng), Partition::row(1));
        assert_eq!(sample_plancherel_hookwalk(0, &mut rng), Partition::empty());
    }

    #[test]
    fn hookwalk_chi_square_n5() {
        let shapes = chunked(50_000, 12, "hw5", |r| sample_plancherel_hookwalk(5, r));
        let parts = partitions_of(5);
        let observed: Vec<u64> = parts.iter().map(|l| shapes.iter().filter(|s| *s == l).count() as u64).collect();
        let expected: Vec<f64> = parts.iter().map(plancherel_weight).collect();
        assert!(!chi_square(&observed, &expected).rejects_at(0.01));
    }

    #[test]
    fn samplers_agree_on_mean_first_row() {
        let a: Vec<f64> = chunked(4000, 13, "rsk100", |r| sample_plancherel_rsk(100, r).first_row() as f64);
        let b: Vec<f64> = chunked(4000, 13, "hw100", |r| sample_plancherel_hookwalk(100, r).first_row() as f64);
        let se = (std_error(&a).powi(2) + std_error(&b).powi(2)).sqrt();
        assert!((mean(&a) - mean(&b)).abs() < 3.0 * se);
    }

    #[test]
    fn involutions() {
        assert_eq!(involution_count(4), 10u32.into());
        assert_eq!(involution_count(0), num_bigint::BigUint::one());
        let all: Vec<Permutation> = all_permutations(4).into_iter().filter(|s| s.is_involution()).collect();
        assert_eq!(all.len(), 10);
        let draws = chunked(20_000, 14, "inv4", |r| sample_involution(4, r));
        assert!(draws.iter().all(|s| s.is_involution()));
        let observed: Vec<u64> = all.iter().map(|s| draws.iter().filter(|d| *d == s).count() as u64).collect();
        assert!(!chi_square(&observed, &[0.1; 10]).rejects_at(0.01));
        let mut rng = substream(1, "inv-big", 0);
        assert!(sample_involution(1000, &mut rng).is_involution());
    }
}
