//! Hall-Littlewood `Q` functions.
//!
//! Arbitrary index vectors are straightened with the two-entry exchange rules
//! (one rule for an odd gap between neighbours, one for an even gap). Pieri
//! and product expansions use the t-deformed operator series of
//! [`crate::engine`]. Two independent checks are provided: the ψ formula for
//! the Pieri rule, and linear algebra against the `x`-coordinate expansion of
//! the `Q_λ` basis.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{
    exponential_coefficient, solve_many, Family, Monomial, QtPoly, TPoly, XYPolynomial,
};
use crate::engine::{evaluate_series_product, FormalSum, IndexVector, SeriesKind, TranslationSeries};
use crate::partition::{partitions_of, Partition};
use crate::schur::product_series;
use crate::Error;

/// Default rewriting budget for one straightening.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// `Z[t]`-combination of Hall-Littlewood `Q` functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HLSum {
    terms: BTreeMap<Partition, TPoly>,
}

impl HLSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(la: Partition) -> Self {
        let mut s = Self::new();
        s.add(la, &TPoly::one());
        s
    }

    pub fn add(&mut self, la: Partition, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(la) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Adds `c * other`.
    pub fn add_scaled(&mut self, other: &HLSum, c: &TPoly) {
        for (la, d) in &other.terms {
            self.add(la.clone(), &(c * d));
        }
    }

    pub fn coeff(&self, la: &Partition) -> TPoly {
        self.terms.get(la).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient evaluated at an integer `t`; vanishing terms dropped.
    pub fn eval_at(&self, t: i64) -> BTreeMap<Partition, num_bigint::BigInt> {
        let t = num_bigint::BigInt::from(t);
        self.terms
            .iter()
            .map(|(la, c)| (la.clone(), c.eval(&t)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

impl FromIterator<(Partition, TPoly)> for HLSum {
    fn from_iter<I: IntoIterator<Item = (Partition, TPoly)>>(iter: I) -> Self {
        let mut s = HLSum::new();
        for (la, c) in iter {
            s.add(la, &c);
        }
        s
    }
}

/// `q_n(x)`: the degree-`n` coefficient of `exp(sum (1 - t^i) x_i z^i)`.
pub fn q_poly(n: i64, num_vars: usize) -> XYPolynomial {
    exponential_coefficient(n, num_vars, Family::X, |i| TPoly::one_minus_t_pow(i).to_qt())
}

/// Which ascent the rewriting attacks first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    LeftmostAscent,
    RightmostAscent,
}

/// Rewrites `Q_(..,a,b,..)` with `a < b` into vectors that are descending at
/// this position.
///
/// Odd gap `b - a = 2m + 1`:
/// `t Q_(b,a) + sum_{p=1}^{m} t^{p-1} (t^2 - 1) Q_(b-p, a+p)`.
/// Even gap `b - a = 2m + 2`: the same sum plus `t^m (t - 1) Q_(c,c)` with
/// `c = (a + b) / 2`.
pub fn exchange_rule(a: i64, b: i64) -> Vec<((i64, i64), TPoly)> {
    debug_assert!(a < b);
    let gap = b - a;
    let t = TPoly::monomial(1, 1);
    let t2_minus_1 = TPoly::from_i64s(&[-1, 0, 1]);
    let m = if gap % 2 == 1 { (gap - 1) / 2 } else { (gap - 2) / 2 };
    let mut out = vec![((b, a), t)];
    for p in 1..=m {
        out.push(((b - p, a + p), t2_minus_1.shift(p as usize - 1)));
    }
    if gap % 2 == 0 {
        let c = (a + b) / 2;
        out.push(((c, c), TPoly::from_i64s(&[-1, 1]).shift(m as usize)));
    }
    out
}

/// Memo table for straightening. Values are deterministic, so a cached entry
/// always equals a fresh recomputation.
#[derive(Debug, Default)]
pub struct StraighteningCache {
    memo: HashMap<IndexVector, HLSum>,
    strategy: Strategy,
    fuel: u64,
    steps: u64,
}

impl StraighteningCache {
    pub fn new() -> Self {
        Self::with_strategy(Strategy::LeftmostAscent)
    }

    pub fn with_strategy(strategy: Strategy) -> Self {
        Self { memo: HashMap::new(), strategy, fuel: DEFAULT_FUEL, steps: 0 }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Expands `Q_v` in the `Q_λ` basis.
    pub fn straighten(&mut self, v: &IndexVector) -> Result<HLSum, Error> {
        self.steps = 0;
        self.go(v)
    }

    fn go(&mut self, v: &IndexVector) -> Result<HLSum, Error> {
        if let Some(s) = self.memo.get(v) {
            return Ok(s.clone());
        }
        let e = v.entries();
        let ascent = match self.strategy {
            Strategy::LeftmostAscent => e.windows(2).position(|w| w[0] < w[1]),
            Strategy::RightmostAscent => e.windows(2).rposition(|w| w[0] < w[1]),
        };
        let result = match ascent {
            None => {
                if e.last().is_some_and(|&x| x < 0) {
                    HLSum::new()
                } else {
                    HLSum::singleton(Partition::from_sorted(e.iter().map(|&x| x as usize).collect()))
                }
            }
            Some(i) => {
                self.steps += 1;
                if self.steps > self.fuel {
                    return Err(Error::FuelExhausted { steps: self.steps });
                }
                let mut acc = HLSum::new();
                for ((x, y), c) in exchange_rule(e[i], e[i + 1]) {
                    let mut w = e.to_vec();
                    w[i] = x;
                    w[i + 1] = y;
                    let sub = self.go(&IndexVector::new(w))?;
                    acc.add_scaled(&sub, &c);
                }
                acc
            }
        };
        self.memo.insert(v.clone(), result.clone());
        Ok(result)
    }
}

/// Expands `Q_v` in the `Q_λ` basis with a fresh cache.
pub fn straighten_hl(v: &IndexVector) -> Result<HLSum, Error> {
    StraighteningCache::new().straighten(v)
}

fn straighten_sum(cache: &mut StraighteningCache, sum: &FormalSum) -> Result<HLSum, Error> {
    let mut out = HLSum::new();
    for (v, c) in sum.terms() {
        let s = cache.straighten(v)?;
        out.add_scaled(&s, c);
    }
    Ok(out)
}

/// `Q_mu * Q_nu` expanded in the `Q_λ` basis, reusing `cache`.
pub fn mul_hl_with(cache: &mut StraighteningCache, mu: &Partition, nu: &Partition) -> Result<HLSum, Error> {
    let (base, series) = product_series(mu, nu, SeriesKind::TDeformed);
    let expanded = evaluate_series_product(&FormalSum::singleton(base), &series)?;
    straighten_sum(cache, &expanded)
}

/// `Q_mu * Q_nu` expanded in the `Q_λ` basis.
pub fn mul_hl(mu: &Partition, nu: &Partition) -> Result<HLSum, Error> {
    mul_hl_with(&mut StraighteningCache::new(), mu, nu)
}

/// `Q_mu * q_r` expanded in the `Q_λ` basis.
pub fn pieri_hl(mu: &Partition, r: usize) -> Result<HLSum, Error> {
    if r == 0 {
        return Ok(HLSum::singleton(mu.clone()));
    }
    mul_hl(mu, &Partition::from_sorted(vec![r]))
}

/// `ψ_{λ/μ}(t)`: zero unless `λ/μ` is a horizontal strip, otherwise
/// `prod (1 - t^{m_j(μ)})` over columns `j >= 1` where the strip has no cell
/// in column `j` but one in column `j + 1`.
pub fn psi_coefficient(la: &Partition, mu: &Partition) -> TPoly {
    if !la.contains(mu) {
        return TPoly::zero();
    }
    // horizontal strip: mu_i >= la_{i+1}
    if (1..=la.len()).any(|i| mu.part(i) < la.part(i + 1)) {
        return TPoly::zero();
    }
    let (lc, mc) = (la.conjugate(), mu.conjugate());
    let strip_col = |j: usize| lc.part(j) - mc.part(j);
    let mut out = TPoly::one();
    for j in 1..=la.part(1) {
        if strip_col(j) < strip_col(j + 1) {
            out = &out * &TPoly::one_minus_t_pow(mu.multiplicity(j));
        }
    }
    out
}

/// `Q_λ` in the `x` coordinates, from `prod_{i<j} (1 - R_ij)/(1 - t R_ij)`
/// applied to `q_λ = q_{λ_1} q_{λ_2} ...`.
pub fn hl_to_x(la: &Partition, num_vars: usize) -> Result<XYPolynomial, Error> {
    let l = la.len();
    let mut series = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            series.push(TranslationSeries::new(i, j, SeriesKind::TDeformedInverse));
        }
    }
    let base = IndexVector::new(la.to_i64s());
    let expanded = evaluate_series_product(&FormalSum::singleton(base), &series)?;
    let mut q_cache: HashMap<i64, XYPolynomial> = HashMap::new();
    let mut out = XYPolynomial::zero();
    for (v, c) in expanded.terms() {
        // q_n = 0 for n < 0
        if v.entries().iter().any(|&x| x < 0) {
            continue;
        }
        let mut prod = XYPolynomial::constant(c.to_qt());
        for &n in v.entries() {
            let q = q_cache.entry(n).or_insert_with(|| q_poly(n, num_vars));
            prod = &prod * q;
        }
        out = &out + &prod;
    }
    Ok(out)
}

/// Expands each weight-`weight` polynomial in the basis `{Q_λ : |λ| = weight}`
/// by solving the linear system in the `x`-monomial coordinates.
pub fn expand_many_in_hl_basis(polys: &[XYPolynomial], weight: usize) -> Result<Vec<HLSum>, Error> {
    for p in polys {
        if !p.is_homogeneous_of(weight as i64) {
            return Err(Error::Invariant(format!("polynomial is not homogeneous of weight {weight}")));
        }
    }
    let basis = partitions_of(weight, weight);
    let columns_xy = basis
        .iter()
        .map(|la| hl_to_x(la, weight))
        .collect::<Result<Vec<_>, _>>()?;
    let mut monomials: Vec<Monomial> = columns_xy
        .iter()
        .chain(polys)
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monomials.sort();
    monomials.dedup();
    let to_vec = |p: &XYPolynomial| -> Vec<QtPoly> { monomials.iter().map(|m| p.coeff(m)).collect() };
    let columns: Vec<Vec<QtPoly>> = columns_xy.iter().map(to_vec).collect();
    let targets: Vec<Vec<QtPoly>> = polys.iter().map(to_vec).collect();
    let sols = solve_many(&columns, &targets)?;
    Ok(sols
        .into_iter()
        .map(|x| basis.iter().cloned().zip(x).collect())
        .collect())
}

/// Single-polynomial form of [`expand_many_in_hl_basis`].
pub fn expand_in_hl_basis(p: &XYPolynomial, weight: usize) -> Result<HLSum, Error> {
    Ok(expand_many_in_hl_basis(std::slice::from_ref(p), weight)?.remove(0))
}

/// `b_λ(t) = prod_i φ_{m_i(λ)}(t)` with `φ_r(t) = (1-t)(1-t^2)...(1-t^r)`.
pub fn b_lambda(la: &Partition) -> TPoly {
    let mut out = TPoly::one();
    let mut values: Vec<usize> = la.parts().to_vec();
    values.dedup();
    for v in values {
        for k in 1..=la.multiplicity(v) {
            out = &out * &TPoly::one_minus_t_pow(k);
        }
    }
    out
}

/// Structure constant of `P_λ` in `P_mu * P_nu`, from the `Q` constant via
/// `f_Q * b_λ / (b_mu b_nu)`; the division must be exact.
pub fn p_structure_constant(mu: &Partition, nu: &Partition, la: &Partition) -> Result<TPoly, Error> {
    let q = mul_hl(mu, nu)?.coeff(la);
    p_from_q_coefficient(&q, mu, nu, la)
}

pub(crate) fn p_from_q_coefficient(q: &TPoly, mu: &Partition, nu: &Partition, la: &Partition) -> Result<TPoly, Error> {
    if q.is_zero() {
        return Ok(TPoly::zero());
    }
    let num = q * &b_lambda(la);
    let den = &b_lambda(mu) * &b_lambda(nu);
    Ok(num.div_exact(&den)?)
}
