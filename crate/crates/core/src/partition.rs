//! Integer partitions (Young diagrams).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("parts must be nonnegative: {0:?}")]
    Negative(Vec<i64>),
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Validates and canonicalizes.
    pub fn new(parts: &[i64]) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p < 0) {
            return Err(PartitionError::Negative(parts.to_vec()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.to_vec()));
        }
        Ok(Self::from_sorted(parts.iter().map(|&p| p as usize).collect()))
    }

    /// Builds from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|k| self.0.get(k)).copied().unwrap_or(0)
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        self.0.iter().map(|&p| p as i64).collect()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Parts of both partitions merged in descending order.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` with at most `max_len` parts, in reverse
/// lexicographic order (largest first part first).
pub fn partitions_of(n: usize, max_len: usize) -> Vec<Partition> {
    fn rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n` (and at most `max_len` parts).
pub fn partitions_up_to(n: usize, max_len: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k, max_len)).collect()
}

/// All partitions contained in `outer`.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in 0..=bound.min(outer[i]) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn canonical_and_validation() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[1, -1]).is_err());
        assert_eq!(p(&[3, 2, 1]).union(&p(&[2, 1])), p(&[3, 2, 2, 1, 1]));
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(sub_partitions(&p(&[2, 1])).len(), 5);
    }

    #[test]
    fn conjugate_and_multiplicity() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).multiplicity(2), 2);
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3]).contains(&p(&[1, 1])));
    }
}
