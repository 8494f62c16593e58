use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `[n]`, stored 0-based internally.
///
/// Serialized in one-line notation with 1-based values, `[s(1), …, s(n)]`.
/// The cycle decomposition is computed on first use and cached.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u32>,
    #[serde(skip)]
    cycles: OnceLock<Vec<Vec<u32>>>,
}

impl Permutation {
    /// From 1-based one-line notation.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &w in word {
            if w == 0 || w > n || seen[w - 1] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection of [{n}]")));
            }
            seen[w - 1] = true;
            images.push((w - 1) as u32);
        }
        Ok(Permutation::from_images_unchecked(images))
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("0-based images {images:?} are not a bijection")));
            }
            seen[v] = true;
        }
        Ok(Permutation::from_images_unchecked(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images, cycles: OnceLock::new() }
    }

    /// From disjoint cycles on `1..=n`, e.g. `[[1,5,3],[2,4]]` for `(153)(24)`.
    /// Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n || seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle list {cycles:?} for n = {n}")));
                }
                seen[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = (b - 1) as u32;
            }
        }
        Permutation::from_images(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_images_unchecked((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `s(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// Cycles as 1-based lists, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles0().iter().map(|c| c.iter().map(|&v| v as usize + 1).collect()).collect()
    }

    fn cycles0(&self) -> &Vec<Vec<u32>> {
        self.cycles.get_or_init(|| {
            let n = self.images.len();
            let mut seen = vec![false; n];
            let mut out = Vec::new();
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    cyc.push(i as u32);
                    i = self.images[i] as usize;
                }
                out.push(cyc);
            }
            out
        })
    }

    /// Number of cycles `ℓ(s)`.
    pub fn num_cycles(&self) -> usize {
        self.cycles0().len()
    }

    /// Partition formed by the cycle lengths.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles0().iter().map(Vec::len).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation::from_images_unchecked(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation::from_images_unchecked(other.images.iter().map(|&v| self.images[v as usize]).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.images[v as usize] as usize == i)
    }

    /// The canonical projection `S_n → S_{n−1}`: `n` is cut out of its cycle.
    /// `S_1` maps to the empty permutation; `S_0` maps to itself.
    pub fn canonical_projection(&self) -> Permutation {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let last = (n - 1) as u32;
        let target = self.images[n - 1];
        let images = self.images[..n - 1].iter().map(|&v| if v == last { target } else { v }).collect();
        Permutation::from_images_unchecked(images)
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Permutation {}

impl std::hash::Hash for Permutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            write!(f, "(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 && self.len() >= 10 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        if self.is_empty() {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Every permutation of `[n]`, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images_unchecked(cur.clone()));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
