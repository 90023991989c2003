//! Schur functions: straightening of arbitrary index vectors, the Pieri rule
//! and products via raising-operator series, plus two independent checks
//! (Littlewood-Richardson tableaux and the Jacobi-Trudi expansion in the
//! `x` coordinates).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{determinant, h_poly, XYPolynomial};
use crate::engine::{evaluate_series_product, FormalSum, IndexVector, SeriesKind, TranslationSeries};
use crate::partition::Partition;
use crate::Error;

/// Integer combination of Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurSum {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(la: Partition) -> Self {
        let mut s = Self::new();
        s.add(la, &BigInt::one());
        s
    }

    pub fn add(&mut self, la: Partition, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(la).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, la: &Partition) -> BigInt {
        self.terms.get(la).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Partition, BigInt)> for SchurSum {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut s = SchurSum::new();
        for (la, c) in iter {
            s.add(la, &c);
        }
        s
    }
}

/// `S_v = sign * S_λ`, or zero.
///
/// With `δ = (L-1, ..., 1, 0)`, `S_v` vanishes unless `v + δ` has distinct
/// nonnegative entries; otherwise sorting `v + δ` decreasingly by a
/// permutation `w` gives `S_v = sign(w) S_{sort(v + δ) - δ}`.
pub fn straighten_schur(v: &IndexVector) -> Option<(i32, Partition)> {
    let len = v.len();
    let mut beta: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(p, &x)| x + (len - 1 - p) as i64)
        .collect();
    if beta.iter().any(|&b| b < 0) {
        return None;
    }
    // insertion sort, counting transpositions
    let mut sign = 1;
    for i in 1..len {
        let mut j = i;
        while j > 0 && beta[j - 1] < beta[j] {
            beta.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = beta
        .iter()
        .enumerate()
        .map(|(p, &b)| (b - (len - 1 - p) as i64) as usize)
        .collect();
    Some((sign, Partition::from_sorted(parts)))
}

/// Straightening by repeated use of `S_(..,a,b,..) = -S_(..,b-1,a+1,..)`
/// at the leftmost ascent. Kept as an independent check of
/// [`straighten_schur`].
pub fn straighten_schur_by_swaps(v: &IndexVector) -> Option<(i32, Partition)> {
    let mut cur = v.entries().to_vec();
    let mut sign = 1;
    loop {
        match cur.windows(2).position(|w| w[0] < w[1]) {
            None => break,
            Some(i) => {
                let (a, b) = (cur[i], cur[i + 1]);
                if b == a + 1 {
                    return None;
                }
                cur[i] = b - 1;
                cur[i + 1] = a + 1;
                sign = -sign;
            }
        }
    }
    if cur.last().is_some_and(|&x| x < 0) {
        return None;
    }
    Some((sign, Partition::from_sorted(cur.iter().map(|&x| x as usize).collect())))
}

/// Base vector and operator list for the product of the basis elements
/// indexed by `mu` and `nu`.
///
/// `nu_k` goes to position `i_k + k`, where `i_k` counts the parts of `mu`
/// that are `>= nu_k`. Each such position is joined to every `mu` position by
/// a series moving a unit leftward: `R_{j, i_k+k}` for `mu` positions `j` to
/// its left and `R_{i_k+k, j}` for those to its right.
pub fn product_series(mu: &Partition, nu: &Partition, kind: SeriesKind) -> (IndexVector, Vec<TranslationSeries>) {
    let l = mu.len();
    let total = l + nu.len();
    let slots: Vec<usize> = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &part)| mu.parts().iter().filter(|&&m| m >= part).count() + k + 1)
        .collect();
    let mut base = Vec::with_capacity(total);
    let (mut mi, mut ni) = (0, 0);
    for pos in 1..=total {
        if ni < slots.len() && slots[ni] == pos {
            base.push(nu.parts()[ni] as i64);
            ni += 1;
        } else {
            base.push(mu.parts()[mi] as i64);
            mi += 1;
        }
    }
    let mut series = Vec::new();
    for &pos in &slots {
        for j in (1..pos).filter(|j| !slots.contains(j)) {
            series.push(TranslationSeries::new(j, pos, kind));
        }
        for j in (pos + 1..=total).filter(|j| !slots.contains(j)) {
            series.push(TranslationSeries::new(pos, j, kind));
        }
    }
    (IndexVector::new(base), series)
}

fn straighten_sum(sum: &FormalSum) -> Result<SchurSum, Error> {
    let mut out = SchurSum::new();
    for (v, c) in sum.terms() {
        let c = c
            .as_constant()
            .ok_or_else(|| Error::Invariant(format!("non-constant Schur coefficient {c} at {v}")))?;
        if let Some((sign, la)) = straighten_schur(v) {
            out.add(la, &(c * sign));
        }
    }
    Ok(out)
}

/// `S_mu * h_r` expanded in Schur functions.
pub fn pieri_schur(mu: &Partition, r: usize) -> Result<SchurSum, Error> {
    if r == 0 {
        return Ok(SchurSum::singleton(mu.clone()));
    }
    mul_schur(mu, &Partition::from_sorted(vec![r]))
}

/// `S_mu * S_nu` expanded in Schur functions.
pub fn mul_schur(mu: &Partition, nu: &Partition) -> Result<SchurSum, Error> {
    let (base, series) = product_series(mu, nu, SeriesKind::Plain);
    let expanded = evaluate_series_product(&FormalSum::singleton(base), &series)?;
    straighten_sum(&expanded)
}

/// `c^la_{mu,nu}` by counting semistandard fillings of `la/mu` with content
/// `nu` whose reverse reading word is a lattice word.
pub fn lr_tableaux_oracle(mu: &Partition, nu: &Partition, la: &Partition) -> u64 {
    if la.weight() != mu.weight() + nu.weight() || !la.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    // cells in reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 0..la.len() {
        let start = mu.part(r + 1);
        for c in (start..la.part(r + 1)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = la.parts().iter().map(|&w| vec![0; w]).collect();
    let mut count = vec![0usize; nu.len() + 1];
    let content: Vec<usize> = std::iter::once(0).chain(nu.parts().iter().copied()).collect();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
        content: &[usize],
        mu: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut hi = content.len() - 1;
        if c + 1 < grid[r].len() {
            hi = hi.min(grid[r][c + 1]);
        }
        let mut lo = 1;
        if r > 0 && c >= mu.part(r) {
            lo = grid[r - 1][c] + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            if count[v] >= content[v] {
                continue;
            }
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            count[v] += 1;
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, count, content, mu);
            grid[r][c] = 0;
            count[v] -= 1;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut count, &content, mu)
}

/// Jacobi-Trudi expansion `det(h_{λ_i - i + j}(x))` in `x_1..x_num_vars`.
pub fn schur_to_x(la: &Partition, num_vars: usize) -> XYPolynomial {
    let l = la.len();
    let matrix: Vec<Vec<XYPolynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| h_poly(la.part(i) as i64 - i as i64 + j as i64, num_vars))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Family, Monomial, QtPoly};
    use num_rational::BigRational;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    fn iv(v: &[i64]) -> IndexVector {
        IndexVector::new(v.to_vec())
    }

    fn sum(terms: &[(&[i64], i64)]) -> SchurSum {
        terms.iter().map(|(la, c)| (p(la), BigInt::from(*c))).collect()
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten_schur(&iv(&[2, 3])), None);
        assert_eq!(straighten_schur(&iv(&[2, 4])), Some((-1, p(&[3, 3]))));
        assert_eq!(straighten_schur(&iv(&[5, -1, 1])), Some((-1, p(&[5]))));
        assert_eq!(straighten_schur(&iv(&[3, 2, 1])), Some((1, p(&[3, 2, 1]))));
        assert_eq!(straighten_schur(&iv(&[1, 3, 2])), Some((-1, p(&[2, 2, 2]))));
        assert_eq!(straighten_schur(&iv(&[4, 0, 1])), None);
        assert_eq!(straighten_schur(&iv(&[6, -2, 1])), None);
        assert_eq!(straighten_schur(&iv(&[6, -1])), None);
        assert_eq!(straighten_schur(&iv(&[])), Some((1, Partition::empty())));
    }

    #[test]
    fn swap_rule_agrees_with_closed_form() {
        let mut v = [-3i64; 4];
        loop {
            for len in 0..=4 {
                let w = iv(&v[..len]);
                assert_eq!(straighten_schur(&w), straighten_schur_by_swaps(&w), "{w}");
            }
            let mut i = 0;
            while i < 4 && v[i] == 6 {
                v[i] = -3;
                i += 1;
            }
            if i == 4 {
                break;
            }
            v[i] += 1;
        }
    }

    #[test]
    fn product_series_layout() {
        let (base, series) = product_series(&p(&[2, 1]), &p(&[2, 1]), SeriesKind::Plain);
        assert_eq!(base, iv(&[2, 2, 1, 1]));
        let ops: Vec<(usize, usize)> = series.iter().map(|s| (s.source, s.target)).collect();
        assert_eq!(ops, vec![(1, 2), (2, 3), (1, 4), (3, 4)]);

        let (base, series) = product_series(&Partition::empty(), &p(&[3, 1]), SeriesKind::Plain);
        assert_eq!(base, iv(&[3, 1]));
        assert!(series.is_empty());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_schur(&p(&[2, 1]), 2).unwrap(),
            sum(&[(&[2, 2, 1], 1), (&[3, 1, 1], 1), (&[3, 2], 1), (&[4, 1], 1)])
        );
        assert_eq!(pieri_schur(&Partition::empty(), 3).unwrap(), sum(&[(&[3], 1)]));
        assert_eq!(pieri_schur(&p(&[1, 1]), 1).unwrap(), sum(&[(&[2, 1], 1), (&[1, 1, 1], 1)]));
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            mul_schur(&p(&[2, 1]), &p(&[2, 1])).unwrap(),
            sum(&[
                (&[2, 2, 1, 1], 1),
                (&[3, 3], 1),
                (&[3, 2, 1], 2),
                (&[2, 2, 2], 1),
                (&[3, 1, 1, 1], 1),
                (&[4, 1, 1], 1),
                (&[4, 2], 1),
            ])
        );
        assert_eq!(mul_schur(&Partition::empty(), &p(&[3, 2])).unwrap(), sum(&[(&[3, 2], 1)]));
        assert_eq!(mul_schur(&p(&[3, 2]), &Partition::empty()).unwrap(), sum(&[(&[3, 2], 1)]));
        assert_eq!(mul_schur(&p(&[1]), &p(&[1])).unwrap(), sum(&[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn tableaux_oracle_examples() {
        assert_eq!(lr_tableaux_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_tableaux_oracle(&Partition::empty(), &p(&[3, 1]), &p(&[3, 1])), 1);
        assert_eq!(lr_tableaux_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2])), 0);
        assert_eq!(lr_tableaux_oracle(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        // mu not contained in la
        assert_eq!(lr_tableaux_oracle(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(schur_to_x(&p(&[1]), 1), XYPolynomial::var(Family::X, 1));
        assert_eq!(schur_to_x(&Partition::empty(), 0), XYPolynomial::one());
        let half = QtPoly::from_rational(BigRational::new(1.into(), 2.into()));
        let expected = &XYPolynomial::term(Monomial::new(vec![2], vec![]), half)
            - &XYPolynomial::var(Family::X, 2);
        assert_eq!(schur_to_x(&p(&[1, 1]), 2), expected);
    }
}
