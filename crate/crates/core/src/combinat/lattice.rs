//! Half-integer lattice `Z′ = Z + ½` and the diagram ↔ particle dictionary.
//!
//! A diagram `λ` is sent to the cofinite set `L(λ) = {λ_i − i + ½ : i ≥ 1}`.
//! Only finitely many particles sit on the positive half-line and exactly as
//! many holes on the negative one, so a configuration is stored as those two
//! finite sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A point of `Z′`, stored doubled: `HalfInt(2x)` with `2x` odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_doubled(doubled: i64) -> Result<Self> {
        if doubled.rem_euclid(2) != 1 {
            return Err(Error::InvalidParameter(format!("{doubled} is even, so {doubled}/2 is not in Z + 1/2")));
        }
        Ok(HalfInt(doubled))
    }

    /// `k + ½`.
    pub fn from_floor(k: i64) -> Self {
        HalfInt(2 * k + 1)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    /// `x − ½`, an integer.
    pub fn floor(self) -> i64 {
        (self.0 - 1) / 2
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn shift(self, k: i64) -> Self {
        HalfInt(self.0 + 2 * k)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl TryFrom<i64> for HalfInt {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        HalfInt::from_doubled(v)
    }
}

impl From<HalfInt> for i64 {
    fn from(h: HalfInt) -> i64 {
        h.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The cofinite set `(Z′₋ \ negative_holes) ∪ positives`.
///
/// JSON: `{"positives": [...], "negative_holes": [...]}` with every point written
/// doubled (`7/2` is `7`, `-1/2` is `-1`). Both lists are sorted by decreasing
/// absolute value.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointConfiguration {
    positives: Vec<HalfInt>,
    negative_holes: Vec<HalfInt>,
}

impl PointConfiguration {
    /// Validates sign, distinctness and balance.
    pub fn new(mut positives: Vec<HalfInt>, mut negative_holes: Vec<HalfInt>) -> Result<Self> {
        if positives.iter().any(|x| !x.is_positive()) || negative_holes.iter().any(|x| x.is_positive()) {
            return Err(Error::InvalidParameter("particles must be positive and holes negative".into()));
        }
        positives.sort_unstable_by(|a, b| b.cmp(a));
        negative_holes.sort_unstable();
        if positives.windows(2).any(|w| w[0] == w[1]) || negative_holes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("repeated lattice site".into()));
        }
        if positives.len() != negative_holes.len() {
            return Err(Error::Unbalanced { positives: positives.len(), holes: negative_holes.len() });
        }
        Ok(PointConfiguration { positives, negative_holes })
    }

    /// `L(λ)`: positive particles are the modified Frobenius coordinates `a_i`,
    /// negative holes are `−b_i`.
    pub fn from_partition(lambda: &Partition) -> Self {
        let (a, b) = frobenius_coordinates(lambda);
        PointConfiguration { positives: a, negative_holes: b.into_iter().map(|x| -x).collect() }
    }

    /// Inverse of [`PointConfiguration::from_partition`].
    pub fn to_partition(&self) -> Partition {
        let b: Vec<HalfInt> = self.negative_holes.iter().map(|&x| -x).collect();
        from_frobenius(&self.positives, &b)
    }

    pub fn positives(&self) -> &[HalfInt] {
        &self.positives
    }

    pub fn negative_holes(&self) -> &[HalfInt] {
        &self.negative_holes
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        if x.is_positive() {
            self.positives.contains(&x)
        } else {
            !self.negative_holes.contains(&x)
        }
    }

    /// Particles `≥ lower`, in decreasing order.
    pub fn particles_above(&self, lower: HalfInt) -> Vec<HalfInt> {
        let mut out: Vec<HalfInt> = self.positives.iter().copied().filter(|&x| x >= lower).collect();
        let mut x = HalfInt::from_doubled(-1).unwrap();
        while x >= lower {
            if !self.negative_holes.contains(&x) {
                out.push(x);
            }
            x = x.shift(-1);
        }
        out
    }

    /// Particle/hole exchange composed with `x → −x`; corresponds to transposition.
    pub fn dual(&self) -> PointConfiguration {
        PointConfiguration {
            positives: self.negative_holes.iter().map(|&x| -x).collect(),
            negative_holes: self.positives.iter().map(|&x| -x).collect(),
        }
    }
}

impl fmt::Debug for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointConfiguration")
            .field("positives", &self.positives)
            .field("negative_holes", &self.negative_holes)
            .finish()
    }
}

/// Modified Frobenius coordinates `a_i = λ_i − i + ½`, `b_i = λ'_i − i + ½`
/// for `i` up to the Durfee size. Both lists are strictly decreasing.
pub fn frobenius_coordinates(lambda: &Partition) -> (Vec<HalfInt>, Vec<HalfInt>) {
    let d = lambda.durfee();
    let conj = lambda.transpose();
    let coord = |len: usize, i: usize| HalfInt::from_floor(len as i64 - i as i64);
    let a = (1..=d).map(|i| coord(lambda.part(i), i)).collect();
    let b = (1..=d).map(|i| coord(conj.part(i), i)).collect();
    (a, b)
}

fn from_frobenius(a: &[HalfInt], b: &[HalfInt]) -> Partition {
    let d = a.len();
    debug_assert_eq!(d, b.len());
    // λ_i = a_i + i − ½ on the Durfee square rows; below it, rows are read off the column lengths λ'_j = b_j + j − ½.
    let rows: Vec<usize> = (1..=d).map(|i| (a[i - 1].floor() + i as i64) as usize).collect();
    let cols: Vec<usize> = (1..=d).map(|j| (b[j - 1].floor() + j as i64) as usize).collect();
    let mut parts = rows;
    let height = cols.first().copied().unwrap_or(0);
    for i in d + 1..=height {
        parts.push(cols.iter().filter(|&&c| c >= i).count());
    }
    Partition::from_parts_unchecked(parts)
}
