//! Universal characters `S_[λ,μ](x, y)`.
//!
//! Products are computed by expanding the decrement series
//! `prod 1/(1 - D_{ξ_i ν_j}) prod 1/(1 - D_{τ_m η_n})` on the pair of
//! Littlewood-Richardson products `[ξ·τ, η·ν]`. The Koike formula and the
//! twisted Jacobi-Trudi determinant serve as independent checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{determinant, h_in, Family, XYPolynomial};
use crate::engine::IndexVector;
use crate::partition::{partitions_of, sub_partitions, Partition};
use crate::schur::{lr_tableaux_oracle, mul_schur, straighten_schur};
use crate::Error;

/// Index `[λ, μ]` of a universal character.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UCIndex {
    pub la: Partition,
    pub mu: Partition,
}

impl UCIndex {
    pub fn new(la: Partition, mu: Partition) -> Self {
        Self { la, mu }
    }
}

impl fmt::Display for UCIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.la, self.mu)
    }
}

/// `|λ| - |μ|`, the degree under `deg x_n = n`, `deg y_n = -n`.
pub fn uc_degree(a: &UCIndex) -> i64 {
    a.la.weight() as i64 - a.mu.weight() as i64
}

/// Integer combination of universal characters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UCSum {
    terms: BTreeMap<UCIndex, BigInt>,
}

impl UCSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: UCIndex, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, key: &UCIndex) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&UCIndex, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(UCIndex, BigInt)> for UCSum {
    fn from_iter<I: IntoIterator<Item = (UCIndex, BigInt)>>(iter: I) -> Self {
        let mut s = UCSum::new();
        for (k, c) in iter {
            s.add(k, &c);
        }
        s
    }
}

/// Twisted Jacobi-Trudi determinant of size `l(μ) + l(λ)`: the first `l(μ)`
/// rows hold `h_{μ_{l'-i+1}+i-j}(y)`, the rest `h_{λ_{i-l'}-i+j}(x)`.
pub fn uc_to_xy(a: &UCIndex, num_vars: usize) -> XYPolynomial {
    let (l, lp) = (a.la.len(), a.mu.len());
    let n = l + lp;
    let matrix: Vec<Vec<XYPolynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let (i, j) = (i as i64, j as i64);
                    if i <= lp as i64 {
                        let part = a.mu.part(lp - i as usize + 1) as i64;
                        h_in(part + i - j, num_vars, Family::Y)
                    } else {
                        let part = a.la.part(i as usize - lp) as i64;
                        h_in(part - i + j, num_vars, Family::X)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// How a decrement that drives a part negative is treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecrementPolicy {
    /// Straighten the decremented vector like any other Schur index.
    #[default]
    Straighten,
    /// Drop the term as soon as a part is negative. Diagnostic only; it
    /// disagrees with the Koike formula.
    StrictVanish,
}

/// Signed partition pairs `(left'', right'')` produced by one decrement
/// series group, with multiplicities.
fn decrement_group(
    left: &Partition,
    right: &Partition,
    policy: DecrementPolicy,
) -> HashMap<(Partition, Partition), i64> {
    let mut lv = left.to_i64s();
    let mut rv = right.to_i64s();
    let cells: Vec<(usize, usize)> = (0..lv.len())
        .flat_map(|i| (0..rv.len()).map(move |j| (i, j)))
        .collect();
    let mut out: HashMap<(Partition, Partition), i64> = HashMap::new();

    // entry p (0-based) of a length-L vector straightens to zero once it drops
    // below -(L - 1 - p); further decrements only make it smaller
    fn dead(v: &[i64], p: usize) -> bool {
        v[p] < -((v.len() - 1 - p) as i64) || v.iter().sum::<i64>() < 0
    }

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lv: &mut Vec<i64>,
        rv: &mut Vec<i64>,
        policy: DecrementPolicy,
        out: &mut HashMap<(Partition, Partition), i64>,
    ) {
        if idx == cells.len() {
            if policy == DecrementPolicy::StrictVanish && lv.iter().chain(rv.iter()).any(|&x| x < 0) {
                return;
            }
            let (Some((s1, p1)), Some((s2, p2))) = (
                straighten_schur(&IndexVector::new(lv.clone())),
                straighten_schur(&IndexVector::new(rv.clone())),
            ) else {
                return;
            };
            *out.entry((p1, p2)).or_default() += (s1 * s2) as i64;
            return;
        }
        let (i, j) = cells[idx];
        let mut k = 0;
        loop {
            rec(idx + 1, cells, lv, rv, policy, out);
            lv[i] -= 1;
            rv[j] -= 1;
            k += 1;
            if dead(lv, i) || dead(rv, j) {
                break;
            }
        }
        lv[i] += k;
        rv[j] += k;
    }

    rec(0, &cells, &mut lv, &mut rv, policy, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

/// `S_[ξ,η] * S_[τ,ν]` expanded in universal characters.
pub fn mul_uc(a: &UCIndex, b: &UCIndex) -> Result<UCSum, Error> {
    mul_uc_with_policy(a, b, DecrementPolicy::Straighten)
}

pub fn mul_uc_with_policy(a: &UCIndex, b: &UCIndex, policy: DecrementPolicy) -> Result<UCSum, Error> {
    let (xi, eta) = (&a.la, &a.mu);
    let (tau, nu) = (&b.la, &b.mu);
    // D_{ξ_i ν_j} and D_{τ_m η_n}
    let first = decrement_group(xi, nu, policy);
    let second = decrement_group(tau, eta, policy);
    let mut lr_cache: HashMap<(Partition, Partition), crate::schur::SchurSum> = HashMap::new();
    let mut lr = |x: &Partition, y: &Partition| -> Result<crate::schur::SchurSum, Error> {
        let key = if x <= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
        if let Some(s) = lr_cache.get(&key) {
            return Ok(s.clone());
        }
        let s = mul_schur(&key.0, &key.1)?;
        lr_cache.insert(key, s.clone());
        Ok(s)
    };
    let mut out = UCSum::new();
    for ((xi2, nu2), c1) in &first {
        for ((tau2, eta2), c2) in &second {
            let left = lr(xi2, tau2)?;
            let right = lr(eta2, nu2)?;
            let c = BigInt::from(c1 * c2);
            for (la, cl) in left.terms() {
                for (mu, cr) in right.terms() {
                    out.add(UCIndex::new(la.clone(), mu.clone()), &(&c * cl * cr));
                }
            }
        }
    }
    Ok(out)
}

/// Memoized Littlewood-Richardson coefficients from the tableaux count.
#[derive(Default)]
struct LrTable {
    memo: HashMap<(Partition, Partition, Partition), u64>,
}

impl LrTable {
    /// `C^outer_{a,b}`
    fn get(&mut self, a: &Partition, b: &Partition, outer: &Partition) -> u64 {
        let key = (a.clone(), b.clone(), outer.clone());
        *self.memo.entry(key).or_insert_with(|| lr_tableaux_oracle(a, b, outer))
    }

    /// `{(x, y) -> sum_κ C^p_{κ x} C^q_{κ y}}` over common sub-partitions κ.
    fn skew_pairs(&mut self, p: &Partition, q: &Partition) -> HashMap<(Partition, Partition), u64> {
        let mut out: HashMap<(Partition, Partition), u64> = HashMap::new();
        for kappa in sub_partitions(p).into_iter().filter(|k| q.contains(k)) {
            let (wp, wq) = (p.weight() - kappa.weight(), q.weight() - kappa.weight());
            let xs: Vec<(Partition, u64)> = partitions_of(wp, wp)
                .into_iter()
                .map(|x| {
                    let c = self.get(&kappa, &x, p);
                    (x, c)
                })
                .filter(|(_, c)| *c != 0)
                .collect();
            let ys: Vec<(Partition, u64)> = partitions_of(wq, wq)
                .into_iter()
                .map(|y| {
                    let c = self.get(&kappa, &y, q);
                    (y, c)
                })
                .filter(|(_, c)| *c != 0)
                .collect();
            for (x, cx) in &xs {
                for (y, cy) in &ys {
                    *out.entry((x.clone(), y.clone())).or_default() += cx * cy;
                }
            }
        }
        out
    }

    /// Expansion of `s_a s_b` by tableaux counts.
    fn product(&mut self, a: &Partition, b: &Partition) -> Vec<(Partition, u64)> {
        let w = a.weight() + b.weight();
        partitions_of(w, w)
            .into_iter()
            .filter(|la| la.contains(a))
            .map(|la| {
                let c = self.get(a, b, &la);
                (la, c)
            })
            .filter(|(_, c)| *c != 0)
            .collect()
    }
}

/// All structure constants of `S_[ξ,η] * S_[τ,ν]` from the Koike formula
/// `M = sum (sum_κ C^ξ_{κα} C^ν_{κβ})(sum_ε C^η_{εθ} C^τ_{εδ}) C^λ_{αδ} C^μ_{βθ}`,
/// every `C` counted by tableaux.
pub fn koike_expansion(a: &UCIndex, b: &UCIndex) -> UCSum {
    let (xi, eta, tau, nu) = (&a.la, &a.mu, &b.la, &b.mu);
    let mut table = LrTable::default();
    // (α, β) from ξ and ν; (θ, δ) from η and τ
    let ab = table.skew_pairs(xi, nu);
    let td = table.skew_pairs(eta, tau);
    let mut out = UCSum::new();
    for ((alpha, beta), c1) in &ab {
        for ((theta, delta), c2) in &td {
            let lams = table.product(alpha, delta);
            let mus = table.product(beta, theta);
            for (la, cl) in &lams {
                for (mu, cm) in &mus {
                    let c = BigInt::from(*c1) * c2 * cl * cm;
                    out.add(UCIndex::new(la.clone(), mu.clone()), &c);
                }
            }
        }
    }
    out
}

/// Koike structure constant `M^{[λ,μ]}_{[ξ,η],[τ,ν]}`.
pub fn koike_coefficient(
    xi: &Partition,
    eta: &Partition,
    tau: &Partition,
    nu: &Partition,
    la: &Partition,
    mu: &Partition,
) -> BigInt {
    let a = UCIndex::new(xi.clone(), eta.clone());
    let b = UCIndex::new(tau.clone(), nu.clone());
    koike_expansion(&a, &b).coeff(&UCIndex::new(la.clone(), mu.clone()))
}
