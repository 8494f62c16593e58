use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, Permutation};
use crate::error::{Error, Result};

/// Standard Young tableau: entries `1..=n`, rows and columns strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens.clone()).map_err(|_| Error::InvalidTableau(format!("row lengths {lens:?} are not a diagram")))?;
        let n: usize = lens.iter().sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::InvalidTableau(format!("entry {e} out of range or repeated")));
                }
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::InvalidTableau(format!("row {} not increasing", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::InvalidTableau(format!("column {} not increasing", j + 1)));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Schensted row insertion of `x`; returns the row index that grew.
pub(crate) fn row_insert<T: Ord + Copy>(rows: &mut Vec<Vec<T>>, mut x: T) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&y| y <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Robinson–Schensted: insertion tableau `P` of the word `s(1)…s(n)` and the
/// recording tableau `Q`.
pub fn rsk(s: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, x) in s.one_line().into_iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k + 1);
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Shape of the insertion tableau of a word, without recording.
pub fn rsk_shape<T: Ord + Copy>(word: &[T]) -> Partition {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for &x in word {
        row_insert(&mut rows, x);
    }
    Partition::from_unsorted(rows.iter().map(Vec::len).collect())
}

pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!("shapes {} and {} differ", p.shape(), q.shape())));
    }
    let n = p.size();
    let mut p = p.rows.clone();
    let mut q = q.rows.clone();
    let mut word = vec![0usize; n];
    for k in (1..=n).rev() {
        // k is the largest entry of Q, so it ends its row
        let r = q.iter().position(|row| row.last() == Some(&k)).expect("largest entry sits at a corner");
        q[r].pop();
        let mut x = p[r].pop().expect("shapes agree");
        for row in p[..r].iter_mut().rev() {
            let pos = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[pos], x);
        }
        word[k - 1] = x;
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
    }
    Permutation::from_one_line(&word)
}

/// Length of a longest increasing subsequence, by patience sorting.
pub fn lis_length(s: &Permutation) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for &x in s.images() {
        let pos = tops.partition_point(|&t| t < x);
        if pos == tops.len() {
            tops.push(x);
        } else {
            tops[pos] = x;
        }
    }
    tops.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::all_permutations;
    use proptest::prelude::*;

    #[test]
    fn identity_is_one_row() {
        let (p, q) = rsk(&Permutation::identity(5));
        assert_eq!(p.rows(), &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(p, q);
        assert_eq!(lis_length(&Permutation::identity(5)), 5);
    }

    #[test]
    fn word_213() {
        let s = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(lis_length(&s), 2);
        let (p, q) = rsk(&s);
        assert_eq!(p.shape(), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(p.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(q.rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn bijection_and_inverse_symmetry() {
        for n in 0..=6 {
            let mut pairs = std::collections::HashSet::new();
            for s in all_permutations(n) {
                let (p, q) = rsk(&s);
                assert_eq!(rsk_inverse(&p, &q).unwrap(), s);
                let (pi, qi) = rsk(&s.inverse());
                assert_eq!((pi, qi), (q.clone(), p.clone()));
                assert!(pairs.insert((p, q)));
            }
        }
    }

    #[test]
    fn inverse_rejects_bad_input() {
        let a = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let b = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert!(rsk_inverse(&a, &b).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(serde_json::from_str::<StandardTableau>("[[1,2],[3,4]]").is_ok());
    }

    #[test]
    fn shape_only_insertion_matches() {
        for s in all_permutations(5) {
            assert_eq!(rsk_shape(s.images()), rsk(&s).0.shape());
        }
    }

    proptest! {
        #[test]
        fn lis_is_first_row(word in Just((1..=40usize).collect::<Vec<_>>()).prop_shuffle()) {
            let s = Permutation::from_one_line(&word).unwrap();
            let (p, q) = rsk(&s);
            prop_assert_eq!(lis_length(&s), p.shape().first_row());
            prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), s);
        }
    }
}
