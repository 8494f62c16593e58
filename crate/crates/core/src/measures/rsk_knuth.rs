use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::{Distribution, Geometric};
use serde::{Deserialize, Serialize};

use super::zmeasure::zmeasure_weight_exact;
use crate::combinat::{factorial, Partition};
use crate::error::{Error, Result};
use crate::plancherel::row_insert;

/// An `N × N′` matrix of nonnegative integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NonnegativeMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl NonnegativeMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!("{} entries for a {rows}×{cols} matrix", entries.len())));
        }
        Ok(NonnegativeMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        NonnegativeMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    /// The permutation matrix with a 1 at `(i, s(i))`.
    pub fn from_permutation(s: &crate::Permutation) -> Self {
        let n = s.len();
        let mut m = NonnegativeMatrix::zeros(n, n);
        for (i, &j) in s.images().iter().enumerate() {
            m.entries[i * n + j as usize] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Bottom line of the biword: column indices in lexicographic order of `(i, j)`, repeated by multiplicity.
    pub fn biword_bottom(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.total() as usize);
        for i in 0..self.rows {
            for j in 0..self.cols {
                w.extend(std::iter::repeat(j).take(self.get(i, j) as usize));
            }
        }
        w
    }
}

/// Shape of the RSK correspondence: row insertion of the biword's bottom line,
/// each letter bumping the leftmost strictly larger entry.
pub fn rsk_knuth(m: &NonnegativeMatrix) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for x in m.biword_bottom() {
        row_insert(&mut rows, x);
    }
    Partition::from_unsorted(rows.iter().map(Vec::len).collect())
}

/// I.i.d. entries with `P(k) = (1−ξ) ξ^k`.
pub fn sample_geometric_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, xi: f64, rng: &mut R) -> Result<NonnegativeMatrix> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::InvalidParameter(format!("need 0 < ξ < 1, got {xi}")));
    }
    let g = Geometric::new(1.0 - xi).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let entries = (0..rows * cols).map(|_| g.sample(rng)).collect();
    Ok(NonnegativeMatrix { rows, cols, entries })
}

/// Maximal entry sum along an up-right path from `(1, 1)` to `(N, N′)`.
pub fn last_passage_time(m: &NonnegativeMatrix) -> u64 {
    let mut g = vec![0u64; m.cols];
    for i in 0..m.rows {
        for j in 0..m.cols {
            let left = if j > 0 { g[j - 1] } else { 0 };
            g[j] = m.get(i, j) + g[j].max(left);
        }
    }
    g.last().copied().unwrap_or(0)
}

/// Every `N × N′` matrix with entry sum `n`.
pub fn matrices_with_sum(rows: usize, cols: usize, n: u64) -> Vec<NonnegativeMatrix> {
    fn fill(slots: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            fill(slots - 1, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if rows * cols == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
    } else {
        fill(rows * cols, n, &mut Vec::new(), &mut out);
    }
    out.into_iter().map(|entries| NonnegativeMatrix { rows, cols, entries }).collect()
}

/// Exact comparison of an enumerated shape law with a target law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactReport {
    pub label: String,
    pub objects: usize,
    pub shapes: usize,
    pub first_mismatch: Option<Partition>,
    pub total_is_one: bool,
}

impl ExactReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none() && self.total_is_one
    }
}

fn compare(label: String, objects: usize, counts: BTreeMap<Partition, u64>, target: impl Fn(&Partition) -> Result<BigRational>, support: Vec<Partition>) -> Result<ExactReport> {
    let denom = BigRational::from_integer(BigInt::from(objects));
    let mut first_mismatch = None;
    let mut total = BigRational::zero();
    for l in support {
        let observed = BigRational::from_integer(BigInt::from(counts.get(&l).copied().unwrap_or(0))) / &denom;
        let expected = target(&l)?;
        total += &expected;
        if observed != expected && first_mismatch.is_none() {
            first_mismatch = Some(l);
        }
    }
    for l in counts.keys() {
        if target(l)?.is_zero() && first_mismatch.is_none() {
            first_mismatch = Some(l.clone());
        }
    }
    Ok(ExactReport { label, objects, shapes: counts.len(), first_mismatch, total_is_one: total == BigRational::one() })
}

/// Shape law of RSK over all `N × N′` matrices with sum `n` (uniformly) against
/// the z-measure with `z = N`, `z′ = N′`.
pub fn matrix_pushforward_check(rows: usize, cols: usize, n: usize) -> Result<ExactReport> {
    let mats = matrices_with_sum(rows, cols, n as u64);
    let mut counts = BTreeMap::new();
    for m in &mats {
        *counts.entry(rsk_knuth(m)).or_insert(0u64) += 1;
    }
    let (z, zp) = (BigRational::from_integer(rows.into()), BigRational::from_integer(cols.into()));
    let support = crate::combinat::partitions_of(n);
    compare(format!("matrices {rows}x{cols}, n = {n}"), mats.len(), counts, |l| zmeasure_weight_exact(l, &z, &zp), support)
}

/// `(N)_λ (dim λ)² / (N^n n!)`, the `N′ → ∞` limit of the z-measure.
pub fn words_law_exact(lambda: &Partition, letters: usize) -> BigRational {
    let n = lambda.size();
    let nn = BigRational::from_integer(letters.into());
    let d = BigInt::from(lambda.dim());
    let num = super::zmeasure::pochhammer_box_exact(&nn, lambda) * BigRational::from_integer(&d * &d);
    let den = BigInt::from(letters).pow(n as u32) * BigInt::from(factorial(n));
    num / BigRational::from_integer(den)
}

/// Schensted insertion of every word of length `n` over `N` letters.
pub fn words_pushforward_check(letters: usize, n: usize) -> Result<ExactReport> {
    if letters == 0 {
        return Err(Error::InvalidParameter("need at least one letter".into()));
    }
    let mut counts = BTreeMap::new();
    let mut word = vec![0usize; n];
    let total = letters.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for w in word.iter_mut() {
            *w = c % letters;
            c /= letters;
        }
        *counts.entry(crate::plancherel::rsk_shape(&word)).or_insert(0u64) += 1;
    }
    let support = crate::combinat::partitions_of(n);
    compare(format!("words over {letters} letters, n = {n}"), total, counts, |l| Ok(words_law_exact(l, letters)), support)
}
