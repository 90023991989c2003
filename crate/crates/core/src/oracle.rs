//! Exhaustive comparisons between the operator formulas and the independent
//! oracles, up to a weight bound.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{QtPoly, XYPolynomial};
use crate::hall_littlewood::{
    expand_many_in_hl_basis, hl_to_x, mul_hl_with, pieri_hl, psi_coefficient, HLSum, StraighteningCache,
};
use crate::partition::{partitions_of, Partition};
use crate::schur::{lr_tableaux_oracle, mul_schur, schur_to_x};
use crate::universal::{koike_expansion, mul_uc, uc_to_xy, UCIndex};
use crate::Error;

/// Largest bound accepted per basis.
pub const MAX_BOUND_SCHUR: usize = 8;
pub const MAX_BOUND_HL: usize = 6;
pub const MAX_BOUND_UC: usize = 6;

/// Bound for the `xy`-polynomial check of universal characters.
pub const MAX_BOUND_UC_XY: usize = 5;

/// Outcome of one oracle sweep. Mismatches are listed in the order found;
/// sweeps run by increasing weight, so the first one is a minimal instance.
#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    pub name: String,
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    fn new(name: &str) -> Self {
        Self { name: name.to_string(), ..Self::default() }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} cases, {} mismatches", self.name, self.cases, self.mismatches.len())?;
        if let Some(first) = self.mismatches.first() {
            write!(f, "; first: {first}")?;
        }
        Ok(())
    }
}

/// All ordered pairs `(mu, nu)` with `|mu| + |nu| = w`.
fn pairs_of_weight(w: usize, max_len: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 0..=w {
        for mu in partitions_of(a, max_len) {
            for nu in partitions_of(w - a, max_len) {
                out.push((mu.clone(), nu));
            }
        }
    }
    out
}

/// All ordered pairs with `|mu| + |nu| <= bound`, by increasing weight.
pub fn pairs_up_to(bound: usize, max_len: usize) -> Vec<(Partition, Partition)> {
    (0..=bound).flat_map(|w| pairs_of_weight(w, max_len)).collect()
}

/// `mul_schur` against tableaux counts, pairs with `|mu| + |nu| <= bound`
/// and at most four parts each.
pub fn check_schur_tableaux(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("schur product vs LR tableaux");
    for (mu, nu) in pairs_up_to(bound, 4) {
        let prod = mul_schur(&mu, &nu)?;
        let w = mu.weight() + nu.weight();
        for la in partitions_of(w, w) {
            let expected = BigInt::from(lr_tableaux_oracle(&mu, &nu, &la));
            let got = prod.coeff(&la);
            report.record(got == expected, || format!("c^{la}_{{{mu},{nu}}}: operator {got}, tableaux {expected}"));
        }
        // nothing outside weight w
        report.record(prod.terms().all(|(la, _)| la.weight() == w), || format!("{mu}x{nu}: wrong weight"));
    }
    Ok(report)
}

/// `S_mu S_nu` in `x` coordinates against the expansion's Jacobi-Trudi sum.
pub fn check_schur_x_expansion(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("schur product vs x-expansion");
    for (mu, nu) in pairs_up_to(bound, bound.max(1)) {
        let n = mu.weight() + nu.weight();
        let lhs = schur_to_x(&mu, n).mul_truncated(&schur_to_x(&nu, n), n as i64);
        let mut rhs = XYPolynomial::zero();
        for (la, c) in mul_schur(&mu, &nu)?.terms() {
            let c = QtPoly::from_rational(num_rational::BigRational::from_integer(c.clone()));
            rhs = &rhs + &schur_to_x(la, n).scale(&c);
        }
        report.record(lhs == rhs, || format!("{mu}x{nu}"));
    }
    Ok(report)
}

/// `mul_hl` against linear algebra on the `x` expansions, all pairs with
/// `|mu| + |nu| <= bound`.
pub fn check_hl_x_expansion(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("hl product vs x-expansion");
    let mut cache = StraighteningCache::new();
    for w in 0..=bound {
        let pairs = pairs_of_weight(w, w);
        let targets: Vec<XYPolynomial> = pairs
            .iter()
            .map(|(mu, nu)| Ok(&hl_to_x(mu, w)? * &hl_to_x(nu, w)?))
            .collect::<Result<_, Error>>()?;
        let expansions = expand_many_in_hl_basis(&targets, w)?;
        for ((mu, nu), expected) in pairs.iter().zip(expansions) {
            let got = mul_hl_with(&mut cache, mu, nu)?;
            report.record(got == expected, || format!("{mu}x{nu}: operator {got:?}, x-expansion {expected:?}"));
        }
    }
    Ok(report)
}

/// `pieri_hl` against `sum ψ_{λ/μ} Q_λ`, for `|mu| <= bound` and `r <= max_r`.
pub fn check_hl_pieri_psi(bound: usize, max_r: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("hl pieri vs psi formula");
    for a in 0..=bound {
        for mu in partitions_of(a, a) {
            for r in 1..=max_r {
                let got = pieri_hl(&mu, r)?;
                let w = a + r;
                let expected: HLSum = partitions_of(w, w)
                    .into_iter()
                    .map(|la| {
                        let c = psi_coefficient(&la, &mu);
                        (la, c)
                    })
                    .collect();
                report.record(got == expected, || format!("Q_{mu} q_{r}: operator {got:?}, psi {expected:?}"));
            }
        }
    }
    Ok(report)
}

/// `mul_hl` at `t = 0` against `mul_schur`.
pub fn check_t0_degeneration(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("hl product at t=0 vs schur product");
    let mut cache = StraighteningCache::new();
    for (mu, nu) in pairs_up_to(bound, bound.max(1)) {
        let hl = mul_hl_with(&mut cache, &mu, &nu)?.eval_at(0);
        let schur: std::collections::BTreeMap<Partition, BigInt> =
            mul_schur(&mu, &nu)?.terms().map(|(la, c)| (la.clone(), c.clone())).collect();
        report.record(hl == schur, || format!("{mu}x{nu}"));
    }
    Ok(report)
}

/// All quadruples `(ξ, η, τ, ν)` with total weight `<= bound`, by increasing
/// total weight.
pub fn uc_pairs_up_to(bound: usize) -> Vec<(UCIndex, UCIndex)> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for wa in 0..=total {
            let left = pairs_of_weight(wa, wa);
            let right = pairs_of_weight(total - wa, total - wa);
            for (a_la, a_mu) in &left {
                for (b_la, b_mu) in &right {
                    out.push((
                        UCIndex::new(a_la.clone(), a_mu.clone()),
                        UCIndex::new(b_la.clone(), b_mu.clone()),
                    ));
                }
            }
        }
    }
    out
}

/// `mul_uc` against the Koike formula, total weight `<= bound`.
pub fn check_uc_koike(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("uc product vs Koike formula");
    for (a, b) in uc_pairs_up_to(bound) {
        let got = mul_uc(&a, &b)?;
        let expected = koike_expansion(&a, &b);
        report.record(got == expected, || format!("{a}x{b}: operator {got:?}, koike {expected:?}"));
    }
    Ok(report)
}

/// `mul_uc` against products of twisted Jacobi-Trudi determinants.
pub fn check_uc_xy(bound: usize) -> Result<OracleReport, Error> {
    let mut report = OracleReport::new("uc product vs xy-expansion");
    for (a, b) in uc_pairs_up_to(bound) {
        let n = a.la.weight() + a.mu.weight() + b.la.weight() + b.mu.weight();
        let lhs = uc_to_xy(&a, n).mul_truncated(&uc_to_xy(&b, n), n as i64);
        let mut rhs = XYPolynomial::zero();
        for (key, c) in mul_uc(&a, &b)?.terms() {
            if c.is_zero() {
                continue;
            }
            let c = QtPoly::from_rational(num_rational::BigRational::from_integer(c.clone()));
            rhs = &rhs + &uc_to_xy(key, n).scale(&c);
        }
        report.record(lhs == rhs, || format!("{a}x{b}"));
    }
    Ok(report)
}
