//! Ewens measures on `S_n`, their cycle-type pushforward, and consistent
//! sampling of virtual-permutation prefixes.
//!
//! The sampler grows a permutation one element at a time: element `k` either
//! opens a new cycle (probability `θ/(θ+k−1)`) or is inserted right after one
//! of the `k−1` elements already placed (probability `1/(θ+k−1)` each).
//! Removing the last element undoes the last insertion, so the levels of a
//! single run are related by canonical projections.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{all_permutations, factorial, Partition, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EwensParams {
    theta: f64,
}

impl EwensParams {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(Error::InvalidParameter(format!("Ewens parameter must be positive, got {theta}")));
        }
        Ok(EwensParams { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// `θ^{ℓ(s)} / (θ(θ+1)…(θ+n−1))`.
pub fn ewens_weight(s: &Permutation, params: EwensParams) -> f64 {
    let th = params.theta;
    let n = s.len();
    let log_den: f64 = (0..n).map(|k| (th + k as f64).ln()).sum();
    (s.num_cycles() as f64 * th.ln() - log_den).exp()
}

/// Rising factorial `(x)_n` over the rationals.
pub fn rising_exact(x: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, k| acc * (x + BigRational::from_integer(BigInt::from(k))))
}

pub fn ewens_weight_exact(s: &Permutation, theta: &BigRational) -> BigRational {
    pow_rational(theta, s.num_cycles()) / rising_exact(theta, s.len())
}

fn pow_rational(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// The canonical projection `p_{n−1,n}`.
pub fn canonical_projection(s: &Permutation) -> Permutation {
    s.canonical_projection()
}

pub fn cycle_type(s: &Permutation) -> Partition {
    s.cycle_type()
}

/// Ewens sampling formula including the `n!` factor:
/// `n! θ^{ℓ(ρ)} / ((θ)_n ∏ k^{m_k} m_k!)`, so that it sums to 1 over `ρ ⊢ n`.
pub fn esf_weight(rho: &Partition, params: EwensParams) -> f64 {
    let th = params.theta;
    let n = rho.size();
    let log_den: f64 = (0..n).map(|k| (th + k as f64).ln()).sum();
    let log_z: f64 = rho
        .multiplicities()
        .into_iter()
        .map(|(k, m)| m as f64 * (k as f64).ln() + crate::combinat::ln_factorial(m))
        .sum();
    (crate::combinat::ln_factorial(n) + rho.length() as f64 * th.ln() - log_den - log_z).exp()
}

pub fn esf_weight_exact(rho: &Partition, theta: &BigRational) -> BigRational {
    let n = rho.size();
    let num = BigRational::from_integer(BigInt::from(factorial(n))) * pow_rational(theta, rho.length());
    let z = BigRational::from_integer(BigInt::from(rho.z_rho()));
    num / (rising_exact(theta, n) * z)
}

/// One step of the insertion construction, placing element `k` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionStep {
    /// `k` becomes a fixed point.
    NewCycle,
    /// `k` is inserted right after the placed element `j` (1-based, `j < k`).
    After(usize),
}

/// Applies a step to 0-based images of a permutation of `[k−1]`, producing one of `[k]`.
pub fn apply_insertion(images: &mut Vec<u32>, step: InsertionStep) {
    let k = images.len() as u32;
    match step {
        InsertionStep::NewCycle => images.push(k),
        InsertionStep::After(j) => {
            let j = j - 1;
            images.push(images[j]);
            images[j] = k;
        }
    }
}

fn draw_step<R: Rng + ?Sized>(k: usize, theta: f64, rng: &mut R) -> InsertionStep {
    if k == 1 || rng.gen::<f64>() * (theta + (k - 1) as f64) < theta {
        InsertionStep::NewCycle
    } else {
        InsertionStep::After(rng.gen_range(1..k))
    }
}

/// Exact sample from the Ewens measure on `S_n`.
pub fn sample_ewens<R: Rng + ?Sized>(n: usize, params: EwensParams, rng: &mut R) -> Permutation {
    let mut images = Vec::with_capacity(n);
    for k in 1..=n {
        apply_insertion(&mut images, draw_step(k, params.theta, rng));
    }
    Permutation::from_images_unchecked(images)
}

/// `(σ_1, …, σ_N)` with `σ_{n−1} = p_{n−1,n}(σ_n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VirtualPermutationPrefix {
    levels: Vec<Permutation>,
}

impl VirtualPermutationPrefix {
    pub fn new(levels: Vec<Permutation>) -> Result<Self> {
        for (k, s) in levels.iter().enumerate() {
            if s.len() != k + 1 {
                return Err(Error::InvalidPermutation(format!("level {} has size {}", k + 1, s.len())));
            }
        }
        let prefix = VirtualPermutationPrefix { levels };
        if !prefix.is_consistent() {
            return Err(Error::InvalidPermutation("levels are not related by canonical projections".into()));
        }
        Ok(prefix)
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// `σ_n`, 1-based.
    pub fn level(&self, n: usize) -> &Permutation {
        &self.levels[n - 1]
    }

    pub fn levels(&self) -> &[Permutation] {
        &self.levels
    }

    pub fn is_consistent(&self) -> bool {
        self.levels.windows(2).all(|w| w[1].canonical_projection() == w[0])
    }
}

/// All `N` levels from one insertion run.
pub fn sample_virtual_prefix<R: Rng + ?Sized>(depth: usize, params: EwensParams, rng: &mut R) -> Result<VirtualPermutationPrefix> {
    if depth == 0 {
        return Err(Error::InvalidParameter("prefix depth must be at least 1".into()));
    }
    let mut images = Vec::with_capacity(depth);
    let mut levels = Vec::with_capacity(depth);
    for k in 1..=depth {
        apply_insertion(&mut images, draw_step(k, params.theta, rng));
        levels.push(Permutation::from_images_unchecked(images.clone()));
    }
    Ok(VirtualPermutationPrefix { levels })
}

/// Law of the insertion sampler on `S_n` obtained by multiplying the step
/// probabilities along every path and summing per outcome.
pub fn insertion_path_law(n: usize, theta: &BigRational) -> HashMap<Permutation, BigRational> {
    let mut frontier: Vec<(Vec<u32>, BigRational)> = vec![(Vec::new(), BigRational::one())];
    for k in 1..=n {
        let den = theta + BigRational::from_integer(BigInt::from(k - 1));
        let p_new = theta / &den;
        let p_after = BigRational::one() / &den;
        let mut next = Vec::with_capacity(frontier.len() * k);
        for (images, p) in frontier {
            let mut a = images.clone();
            apply_insertion(&mut a, InsertionStep::NewCycle);
            next.push((a, &p * &p_new));
            for j in 1..k {
                let mut b = images.clone();
                apply_insertion(&mut b, InsertionStep::After(j));
                next.push((b, &p * &p_after));
            }
        }
        frontier = next;
    }
    let mut law: HashMap<Permutation, BigRational> = HashMap::new();
    for (images, p) in frontier {
        *law.entry(Permutation::from_images_unchecked(images)).or_insert_with(BigRational::zero) += p;
    }
    law
}

/// Exact Ewens law on `S_n` as a map.
pub fn ewens_law_exact(n: usize, theta: &BigRational) -> HashMap<Permutation, BigRational> {
    all_permutations(n).into_iter().map(|s| {
        let w = ewens_weight_exact(&s, theta);
        (s, w)
    }).collect()
}

/// Pushforward of the exact Ewens law on `S_n` under the canonical projection.
pub fn projected_law_exact(n: usize, theta: &BigRational) -> HashMap<Permutation, BigRational> {
    let mut law: HashMap<Permutation, BigRational> = HashMap::new();
    for s in all_permutations(n) {
        let w = ewens_weight_exact(&s, theta);
        *law.entry(s.canonical_projection()).or_insert_with(BigRational::zero) += w;
    }
    law
}

/// Cycle-type aggregation of the exact Ewens law on `S_n`.
pub fn cycle_type_law_exact(n: usize, theta: &BigRational) -> HashMap<Partition, BigRational> {
    let mut law: HashMap<Partition, BigRational> = HashMap::new();
    for s in all_permutations(n) {
        let w = ewens_weight_exact(&s, theta);
        *law.entry(s.cycle_type()).or_insert_with(BigRational::zero) += w;
    }
    law
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use crate::rng::substream;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn thetas() -> Vec<BigRational> {
        vec![q(1, 2), q(1, 1), q(2, 1)]
    }

    #[test]
    fn rejects_bad_theta() {
        assert!(EwensParams::new(0.0).is_err());
        assert!(EwensParams::new(-1.0).is_err());
        assert!(EwensParams::new(f64::NAN).is_err());
    }

    #[test]
    fn uniform_at_theta_one() {
        let p = EwensParams::new(1.0).unwrap();
        for s in all_permutations(5) {
            assert!((ewens_weight(&s, p) - 1.0 / 120.0).abs() < 1e-15);
        }
    }

    #[test]
    fn worked_example_weight() {
        let s = Permutation::from_cycles(5, &[vec![1, 5, 3], vec![2, 4]]).unwrap();
        for th in [0.5, 1.0, 2.0, 3.7] {
            let expected = th * th / (th * (th + 1.0) * (th + 2.0) * (th + 3.0) * (th + 4.0));
            let got = ewens_weight(&s, EwensParams::new(th).unwrap());
            assert!((got - expected).abs() < 1e-15 * expected.max(1.0));
        }
        assert_eq!(cycle_type(&s), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(cycle_type(&Permutation::identity(4)), Partition::column(4));
    }

    #[test]
    fn weights_normalize() {
        for n in 0..=6 {
            for th in [0.5, 1.0, 2.0] {
                let p = EwensParams::new(th).unwrap();
                let total: f64 = all_permutations(n).iter().map(|s| ewens_weight(s, p)).sum();
                assert!((total - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn projection_pushes_ewens_forward() {
        for th in thetas() {
            for n in 2..=6 {
                let pushed = projected_law_exact(n, &th);
                let target = ewens_law_exact(n - 1, &th);
                assert_eq!(pushed, target);
            }
        }
    }

    #[test]
    fn insertion_law_is_ewens() {
        for th in thetas() {
            for n in 0..=6 {
                assert_eq!(insertion_path_law(n, &th), ewens_law_exact(n, &th), "n = {n}");
            }
        }
    }

    #[test]
    fn centrality_on_s5() {
        let p = EwensParams::new(2.5).unwrap();
        let all = all_permutations(5);
        for g in &all {
            let gi = g.inverse();
            for s in all.iter().step_by(7) {
                let c = g.compose(s).compose(&gi);
                assert_eq!(ewens_weight(&c, p), ewens_weight(s, p));
            }
        }
    }

    #[test]
    fn esf_examples() {
        let p1 = EwensParams::new(1.0).unwrap();
        assert!((esf_weight(&Partition::column(3), p1) - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(esf_weight_exact(&Partition::column(3), &q(1, 1)), q(1, 6));
        for n in 1..=8 {
            for th in [0.5, 1.0, 2.0] {
                let p = EwensParams::new(th).unwrap();
                let total: f64 = partitions_of(n).iter().map(|r| esf_weight(r, p)).sum();
                assert!((total - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn esf_matches_class_aggregation() {
        for th in thetas() {
            for n in 1..=7 {
                let law = cycle_type_law_exact(n, &th);
                for rho in partitions_of(n) {
                    assert_eq!(law[&rho], esf_weight_exact(&rho, &th));
                }
            }
        }
    }

    #[test]
    fn sampled_prefixes_are_consistent() {
        let p = EwensParams::new(1.3).unwrap();
        let mut rng = substream(1, "ewens-test", 0);
        for _ in 0..2000 {
            let prefix = sample_virtual_prefix(12, p, &mut rng).unwrap();
            assert!(prefix.is_consistent());
        }
        assert!(sample_virtual_prefix(0, p, &mut rng).is_err());
    }

    #[test]
    fn truncated_sample_is_projection() {
        let p = EwensParams::new(0.7).unwrap();
        for seed in 0..200 {
            let full = sample_ewens(9, p, &mut substream(seed, "trunc", 0));
            let mut rng = substream(seed, "trunc", 0);
            let prefix = sample_virtual_prefix(9, p, &mut rng).unwrap();
            assert_eq!(prefix.level(9), &full);
            assert_eq!(prefix.level(8), &full.canonical_projection());
        }
    }

    #[test]
    fn prefix_rejects_inconsistent_levels() {
        let l1 = Permutation::identity(1);
        let l2 = Permutation::from_one_line(&[2, 1]).unwrap();
        let l3 = Permutation::identity(3);
        assert!(VirtualPermutationPrefix::new(vec![l1.clone(), l2.clone()]).is_ok());
        assert!(VirtualPermutationPrefix::new(vec![l1, l2, l3]).is_err());
    }

    #[test]
    fn uniform_frequencies_small() {
        // θ = 1, n = 3: each of the 6 permutations near 1/6
        let p = EwensParams::new(1.0).unwrap();
        let mut counts: HashMap<Permutation, u64> = HashMap::new();
        let mut rng = substream(5, "uniform3", 0);
        for _ in 0..60_000 {
            *counts.entry(sample_ewens(3, p, &mut rng)).or_default() += 1;
        }
        let observed: Vec<u64> = all_permutations(3).iter().map(|s| counts[s]).collect();
        let out = crate::stats::chi_square(&observed, &[1.0 / 6.0; 6]);
        assert!(!out.rejects_at(0.01), "{out:?}");
    }
}
