use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, read either as a Young diagram or as a cycle type.
///
/// Parts are stored weakly decreasing with no trailing zeros; the empty
/// list is the empty diagram. Boxes are addressed 1-based as `(row, column)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates the parts. Trailing zeros are dropped; any other
    /// violation of weak decrease is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: zero part before a positive one")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary positive lengths (e.g. cycle lengths) by sorting.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row diagram `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column diagram `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(1)
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) >= j
    }

    /// Conjugate diagram: `λ'_i = #{j : λ_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let cols = self.first_row();
        let mut out = Vec::with_capacity(cols);
        // parts are sorted, so the column heights can be read off with a moving pointer
        let mut height = self.parts.len();
        for c in 1..=cols {
            while height > 0 && self.parts[height - 1] < c {
                height -= 1;
            }
            out.push(height);
        }
        Partition { parts: out }
    }

    /// Multiplicities `m_k` for `k = 1..=λ₁`, as a map from part size to count.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Iterates boxes `(i, j)` row by row, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Contents `j − i` of all boxes.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.boxes().map(|(i, j)| j as i64 - i as i64)
    }

    /// Hook length of every box: arm + leg + 1.
    pub fn hook_lengths(&self) -> BTreeMap<(usize, usize), usize> {
        let conj = self.transpose();
        self.boxes()
            .map(|(i, j)| {
                let arm = self.part(i) - j;
                let leg = conj.part(j) - i;
                ((i, j), arm + leg + 1)
            })
            .collect()
    }

    fn hooks_flat(&self) -> Vec<usize> {
        let conj = self.transpose();
        self.boxes().map(|(i, j)| self.part(i) - j + conj.part(j) - i + 1).collect()
    }

    /// Number of standard tableaux of shape `λ`, by the hook length formula.
    pub fn dim(&self) -> BigUint {
        let n = self.size();
        let num = factorial(n);
        let den = self.hooks_flat().into_iter().fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
        num / den
    }

    /// `ln dim λ` in floating point, usable where the exact integer is too large.
    pub fn ln_dim(&self) -> f64 {
        let n = self.size();
        ln_factorial(n) - self.hooks_flat().into_iter().map(|h| (h as f64).ln()).sum::<f64>()
    }

    /// Size of the conjugacy class of cycle type `ρ` in `S_n`: `n!/z_ρ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.z_rho()
    }

    /// `z_ρ = ∏ k^{m_k} m_k!`.
    pub fn z_rho(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (k, m)| acc * BigUint::from(k).pow(m as u32) * factorial(m))
    }

    /// Removable corners `(i, λ_i)`, top to bottom.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.length())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    /// Addable cells `(i, λ_i + 1)`, top to bottom.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.length() + 1)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .map(|i| (i, self.part(i) + 1))
            .collect()
    }

    /// Diagram with the box at the end of row `i` removed.
    pub fn remove_box(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.length() || self.part(i) == self.part(i + 1) {
            return Err(Error::InvalidPartition(format!("row {i} of {self} has no removable box")));
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        Ok(Partition::new(parts).expect("removing a corner keeps the diagram valid"))
    }

    /// Diagram with a box appended to row `i`.
    pub fn add_box(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.length() + 1 || (i > 1 && self.part(i) == self.part(i - 1)) {
            return Err(Error::InvalidPartition(format!("cannot add a box to row {i} of {self}")));
        }
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Durfee square size: the number of diagonal boxes.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn ln_factorial(n: usize) -> f64 {
    statrs::function::factorial::ln_factorial(n as u64)
}

/// Counts standard tableaux by removing corner boxes recursively:
/// `f(λ) = Σ_corners f(λ − □)`, `f(∅) = 1`. Uses no hook lengths.
pub fn standard_tableaux_count(lambda: &Partition) -> BigUint {
    fn go(parts: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > next {
                parts[i] -= 1;
                let popped = parts[i] == 0;
                if popped {
                    parts.pop();
                }
                total += go(parts, memo);
                if popped {
                    parts.push(0);
                }
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total.clone());
        total
    }
    let mut parts = lambda.parts().to_vec();
    go(&mut parts, &mut HashMap::new())
}

/// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions with at most `max_rows` rows and first row at most `max_cols`.
pub fn partitions_in_box(max_rows: usize, max_cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    rec(max_rows, max_cols, &mut cur, &mut out);
    out
}

/// All partitions of `n` with at most `rows` parts.
pub fn partitions_with_rows(n: usize, rows: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.length() <= rows).collect()
}
