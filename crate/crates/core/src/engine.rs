//! Products of geometric series in commuting raising operators.
//!
//! A raising operator `R_sd` (`s < d`, positions 1-based) moves one unit from
//! position `d` to position `s` of an index vector. The product formulas for
//! all three bases are products of series in such operators applied to a
//! base vector; this module expands them exactly.
//!
//! Every application lowers the tail sums `T_p = sum_{m >= p} v_m` at
//! positions `s < p <= d` and leaves the others alone. A vector with a
//! negative tail sum indexes a vanishing basis symbol, and so do all its
//! descendants, so such branches are cut. The potential
//! `Φ(v) = sum_p p * v_p = sum_p T_p` drops by `d - s >= 1` per application
//! and stays nonnegative on retained vectors, which bounds every branch by
//! `Φ(base)` applications.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::TPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("branch used {applications} operator applications, above the potential bound {bound}")]
    BudgetExceeded { applications: u64, bound: i64 },
    #[error("invalid translation R_({from},{to}) on vectors of length {len}")]
    InvalidSeries { from: usize, to: usize, len: usize },
    #[error("formal sum mixes vector lengths {0} and {1}")]
    LengthMismatch(usize, usize),
}

/// Integer vector indexing a (possibly non-normalized) basis symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector(Vec<i64>);

impl IndexVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `Φ(v) = sum_p p * v_p` with 1-based `p`.
    pub fn potential(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &v)| (i as i64 + 1) * v).sum()
    }

    pub fn has_negative_tail_sum(&self) -> bool {
        let mut acc = 0;
        for &v in self.0.iter().rev() {
            acc += v;
            if acc < 0 {
                return true;
            }
        }
        false
    }
}

impl From<Vec<i64>> for IndexVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `T_p = sum_{m >= p} v_m` for every position.
pub fn tail_sums(v: &IndexVector) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    let mut acc = 0;
    for (i, &x) in v.0.iter().enumerate().rev() {
        acc += x;
        out[i] = acc;
    }
    out
}

/// `R_sd`: add one at `source`, subtract one at `target` (1-based, `s < d`).
pub fn apply_translation(v: &IndexVector, source: usize, target: usize) -> IndexVector {
    assert!(1 <= source && source < target && target <= v.len(), "R_({source},{target}) out of range");
    let mut out = v.clone();
    out.0[source - 1] += 1;
    out.0[target - 1] -= 1;
    out
}

/// Coefficient pattern of a geometric series in one raising operator `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `1 / (1 - R) = sum_{k>=0} R^k`
    Plain,
    /// `(1 - tR) / (1 - R) = 1 + (1 - t) sum_{k>=1} R^k`
    TDeformed,
    /// `(1 - R) / (1 - tR) = 1 + (t - 1) sum_{k>=1} t^{k-1} R^k`
    TDeformedInverse,
}

impl SeriesKind {
    /// Coefficient of `R^k`.
    pub fn coefficient(self, k: usize) -> TPoly {
        match (self, k) {
            (_, 0) => TPoly::one(),
            (SeriesKind::Plain, _) => TPoly::one(),
            (SeriesKind::TDeformed, _) => TPoly::from_i64s(&[1, -1]),
            (SeriesKind::TDeformedInverse, _) => TPoly::from_i64s(&[-1, 1]).shift(k - 1),
        }
    }
}

/// One series factor, acting by `R_{source,target}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TranslationSeries {
    pub source: usize,
    pub target: usize,
    pub kind: SeriesKind,
}

impl TranslationSeries {
    pub fn new(source: usize, target: usize, kind: SeriesKind) -> Self {
        Self { source, target, kind }
    }
}

/// Finite formal sum of index vectors (all of one length) with `Z[t]`
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<IndexVector, TPoly>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: IndexVector) -> Self {
        let mut s = Self::new();
        s.add(v, &TPoly::one());
        s
    }

    /// Adds `c * v`, merging like terms and dropping zeros. All vectors in a
    /// sum must share one length.
    pub fn add(&mut self, v: IndexVector, c: &TPoly) {
        if let Some(k) = self.terms.keys().next() {
            assert_eq!(k.len(), v.len(), "formal sum mixes vector lengths");
        }
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(v) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexVector, &TPoly)> {
        self.terms.iter()
    }

    pub fn get(&self, v: &IndexVector) -> Option<&TPoly> {
        self.terms.get(v)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(IndexVector, TPoly)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (IndexVector, TPoly)>>(iter: I) -> Self {
        let mut s = FormalSum::new();
        for (v, c) in iter {
            s.add(v, &c);
        }
        s
    }
}

/// Instrumentation from one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalStats {
    /// Largest number of operator applications along any branch.
    pub max_branch_applications: u64,
    /// Largest `Φ` over the retained base terms.
    pub max_potential: i64,
    /// Total number of surviving exponent tuples.
    pub leaves: u64,
}

/// Expands `prod(series) · base`, keeping only exponent tuples whose
/// vectors never acquire a negative tail sum.
pub fn evaluate_series_product(
    base: &FormalSum,
    series: &[TranslationSeries],
) -> Result<FormalSum, EngineError> {
    evaluate_with_stats(base, series).map(|(s, _)| s)
}

struct Walk<'a> {
    series: &'a [TranslationSeries],
    // coefficient of R^k for each series, grown on demand
    coeffs: Vec<Vec<TPoly>>,
    out: FormalSum,
    stats: EvalStats,
    bound: i64,
}

impl Walk<'_> {
    fn coeff(&mut self, idx: usize, k: usize) -> TPoly {
        let table = &mut self.coeffs[idx];
        while table.len() <= k {
            table.push(self.series[idx].kind.coefficient(table.len()));
        }
        table[k].clone()
    }

    fn descend(&mut self, idx: usize, v: IndexVector, c: TPoly, applications: u64) -> Result<(), EngineError> {
        if idx == self.series.len() {
            self.stats.leaves += 1;
            self.stats.max_branch_applications = self.stats.max_branch_applications.max(applications);
            self.out.add(v, &c);
            return Ok(());
        }
        let TranslationSeries { source, target, .. } = self.series[idx];
        let mut cur = v;
        let mut k = 0usize;
        loop {
            let ck = self.coeff(idx, k);
            let next_c = &c * &ck;
            self.descend(idx + 1, cur.clone(), next_c, applications + k as u64)?;
            k += 1;
            cur = apply_translation(&cur, source, target);
            // tail sums only ever fall, so the rest of this series is dead too
            if cur.has_negative_tail_sum() {
                break;
            }
            let total = applications + k as u64;
            if total as i64 > self.bound {
                return Err(EngineError::BudgetExceeded { applications: total, bound: self.bound });
            }
        }
        Ok(())
    }
}

/// [`evaluate_series_product`] that also reports branch statistics.
pub fn evaluate_with_stats(
    base: &FormalSum,
    series: &[TranslationSeries],
) -> Result<(FormalSum, EvalStats), EngineError> {
    let len = base.terms().next().map(|(v, _)| v.len());
    if let Some(len) = len {
        for s in series {
            if !(1 <= s.source && s.source < s.target && s.target <= len) {
                return Err(EngineError::InvalidSeries { from: s.source, to: s.target, len });
            }
        }
    }
    let mut walk = Walk {
        series,
        coeffs: vec![Vec::new(); series.len()],
        out: FormalSum::new(),
        stats: EvalStats::default(),
        bound: 0,
    };
    for (v, c) in base.terms() {
        if v.has_negative_tail_sum() {
            continue;
        }
        walk.bound = v.potential();
        walk.stats.max_potential = walk.stats.max_potential.max(walk.bound);
        walk.descend(0, v.clone(), c.clone(), 0)?;
    }
    Ok((walk.out, walk.stats))
}
