//! Sparse polynomials in the coordinates `x_1, x_2, ...` and `y_1, y_2, ...`.
//!
//! Coefficients live in `Q[t]`. The grading gives `x_n` weight `n` and `y_n`
//! weight `-n`; every identity checked against these polynomials is
//! weight-homogeneous, so products may be truncated to a weight window.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::QtPoly;

/// Which coordinate family a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    X,
    Y,
}

/// Exponent vectors over `x_1..` and `y_1..`, trailing zeros stripped.
///
/// The derived order compares the `x` exponents lexicographically and then
/// the `y` exponents, which is the order used for canonical serialization.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

fn strip(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Self {
        Self { x: strip(x), y: strip(y) }
    }

    /// The single variable `x_n` or `y_n` (1-based).
    pub fn var(family: Family, n: usize) -> Self {
        assert!(n >= 1, "coordinates are 1-based");
        let mut e = vec![0; n];
        e[n - 1] = 1;
        match family {
            Family::X => Self::new(e, Vec::new()),
            Family::Y => Self::new(Vec::new(), e),
        }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.y
    }

    /// `sum n * exp(x_n) - sum n * exp(y_n)`
    pub fn weight(&self) -> i64 {
        let w = |e: &[u32]| -> i64 {
            e.iter().enumerate().map(|(i, &k)| (i as i64 + 1) * k as i64).sum()
        };
        w(&self.x) - w(&self.y)
    }

    fn combine(a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, &k) in a.iter().enumerate() {
            out[i] += k;
        }
        for (i, &k) in b.iter().enumerate() {
            out[i] += k;
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: Self::combine(&self.x, &other.x),
            y: Self::combine(&self.y, &other.y),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("x", &self.x), ("y", &self.y)] {
            for (i, &k) in exps.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{k}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse polynomial `sum coeff(t) * monomial(x, y)`; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XYPolynomial {
    terms: BTreeMap<Monomial, QtPoly>,
}

impl XYPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QtPoly::one())
    }

    pub fn constant(c: QtPoly) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: QtPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(family: Family, n: usize) -> Self {
        Self::term(Monomial::var(family, n), QtPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QtPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> QtPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &QtPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &QtPoly) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &(a * c));
        }
        out
    }

    /// Distinct weights occurring among the stored monomials.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.terms.keys().map(Monomial::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// True when every monomial has weight exactly `w` (vacuously for zero).
    pub fn is_homogeneous_of(&self, w: i64) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Product with every monomial of weight magnitude above the window
    /// dropped.
    pub fn mul_truncated(&self, other: &XYPolynomial, max_weight_magnitude: i64) -> XYPolynomial {
        let mut out = XYPolynomial::zero();
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if (wa + mb.weight()).abs() > max_weight_magnitude {
                    continue;
                }
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    fn mul_full(&self, other: &XYPolynomial) -> XYPolynomial {
        let mut out = XYPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

/// Truncated product; see [`XYPolynomial::mul_truncated`].
pub fn xpoly_mul(a: &XYPolynomial, b: &XYPolynomial, max_weight_magnitude: i64) -> XYPolynomial {
    a.mul_truncated(b, max_weight_magnitude)
}

impl Add for &XYPolynomial {
    type Output = XYPolynomial;
    fn add(self, rhs: &XYPolynomial) -> XYPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Neg for &XYPolynomial {
    type Output = XYPolynomial;
    fn neg(self) -> XYPolynomial {
        XYPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &XYPolynomial {
    type Output = XYPolynomial;
    fn sub(self, rhs: &XYPolynomial) -> XYPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &XYPolynomial {
    type Output = XYPolynomial;
    fn mul(self, rhs: &XYPolynomial) -> XYPolynomial {
        self.mul_full(rhs)
    }
}

impl fmt::Display for XYPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let cs: Vec<String> = c.coeffs().iter().map(ToString::to_string).collect();
                format!("[{}]*{m}", cs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Coefficient of `z^n` in `exp(sum_i weight(i) * v_i * z^i)` where `v_i` is
/// the `i`-th coordinate of `family`, restricted to `v_1..v_num_vars`.
///
/// This is `sum over k with sum i*k_i = n` of
/// `prod_i (weight(i) v_i)^{k_i} / k_i!`.
pub fn exponential_coefficient<F>(n: i64, num_vars: usize, family: Family, weight: F) -> XYPolynomial
where
    F: Fn(usize) -> QtPoly,
{
    if n < 0 {
        return XYPolynomial::zero();
    }
    let n = n as usize;
    let top = num_vars.min(n);
    let weights: Vec<QtPoly> = (0..=top).map(|i| if i == 0 { QtPoly::one() } else { weight(i) }).collect();
    let mut out = XYPolynomial::zero();
    let mut mult = vec![0u32; top];
    fn rec<F2: FnMut(&[u32])>(part: usize, remaining: usize, mult: &mut Vec<u32>, emit: &mut F2) {
        if remaining == 0 {
            emit(mult);
            return;
        }
        if part == 0 {
            return;
        }
        let max_k = remaining / part;
        for k in (0..=max_k).rev() {
            mult[part - 1] = k as u32;
            rec(part - 1, remaining - k * part, mult, emit);
        }
        mult[part - 1] = 0;
    }
    rec(top, n, &mut mult, &mut |k: &[u32]| {
        let mut c = QtPoly::one();
        let mut denom = BigInt::one();
        for (i, &ki) in k.iter().enumerate() {
            for _ in 0..ki {
                c = &c * &weights[i + 1];
            }
            denom *= factorial(ki);
        }
        let c = c.scale(&BigRational::new(BigInt::one(), denom));
        let m = match family {
            Family::X => Monomial::new(k.to_vec(), Vec::new()),
            Family::Y => Monomial::new(Vec::new(), k.to_vec()),
        };
        out.add_term(m, &c);
    });
    out
}

/// Complete homogeneous polynomial `h_n` in one coordinate family.
pub fn h_in(n: i64, num_vars: usize, family: Family) -> XYPolynomial {
    exponential_coefficient(n, num_vars, family, |_| QtPoly::one())
}

/// `h_n(x)`: the degree-`n` coefficient of `exp(sum x_i z^i)`, zero for
/// negative `n`.
pub fn h_poly(n: i64, num_vars: usize) -> XYPolynomial {
    h_in(n, num_vars, Family::X)
}

/// Determinant by Laplace expansion along rows with memoization over the set
/// of columns still available. Fine for the small sizes used by the oracles.
pub fn determinant(matrix: &[Vec<XYPolynomial>]) -> XYPolynomial {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    assert!(n < 64);
    fn rec(
        matrix: &[Vec<XYPolynomial>],
        row: usize,
        cols: u64,
        memo: &mut HashMap<u64, XYPolynomial>,
    ) -> XYPolynomial {
        let n = matrix.len();
        if row == n {
            return XYPolynomial::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = XYPolynomial::zero();
        let mut sign_pos = true;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &matrix[row][c];
            if !entry.is_zero() {
                let minor = rec(matrix, row + 1, cols & !(1 << c), memo);
                let prod = entry * &minor;
                acc = if sign_pos { &acc + &prod } else { &acc - &prod };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    rec(matrix, 0, all, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> QtPoly {
        QtPoly::from_rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn h_poly_examples() {
        assert_eq!(h_poly(0, 0), XYPolynomial::one());
        assert_eq!(h_poly(-3, 5), XYPolynomial::zero());
        let expected = &XYPolynomial::var(Family::X, 2)
            + &XYPolynomial::term(Monomial::new(vec![2], vec![]), q(1, 2));
        assert_eq!(h_poly(2, 2), expected);
    }

    #[test]
    fn h_poly_is_homogeneous() {
        for n in 0..=12 {
            let h = h_poly(n, n as usize);
            assert!(!h.is_zero());
            assert!(h.is_homogeneous_of(n), "h_{n} not homogeneous");
        }
    }

    #[test]
    fn xpoly_mul_examples() {
        let x1 = XYPolynomial::var(Family::X, 1);
        assert_eq!(
            xpoly_mul(&x1, &x1, 10),
            XYPolynomial::term(Monomial::new(vec![2], vec![]), QtPoly::one())
        );
        let p = h_poly(2, 2);
        assert_eq!(xpoly_mul(&XYPolynomial::one(), &p, 10), p);
        assert_eq!(xpoly_mul(&p, &XYPolynomial::one(), 1), XYPolynomial::zero());
    }

    #[test]
    fn y_weights_are_negative() {
        let y2 = XYPolynomial::var(Family::Y, 2);
        let x2 = XYPolynomial::var(Family::X, 2);
        assert_eq!(y2.weights(), vec![-2]);
        assert_eq!((&y2 * &x2).weights(), vec![0]);
        assert_eq!(h_in(3, 3, Family::Y).weights(), vec![-3]);
    }

    #[test]
    fn determinant_small() {
        let x1 = XYPolynomial::var(Family::X, 1);
        let one = XYPolynomial::one();
        // det [[h1, h2], [h0, h1]] = h1^2 - h2
        let m = vec![vec![h_poly(1, 2), h_poly(2, 2)], vec![one.clone(), h_poly(1, 2)]];
        let expected = &XYPolynomial::term(Monomial::new(vec![2], vec![]), q(1, 2))
            - &XYPolynomial::var(Family::X, 2);
        assert_eq!(determinant(&m), expected);
        assert_eq!(determinant(&[]), one);
        assert_eq!(determinant(&[vec![x1.clone()]]), x1);
    }

    proptest::proptest! {
        #[test]
        fn grading_is_additive(a in proptest::collection::vec((0u32..3, 0u32..3, 0u32..2, -3i64..4), 1..5),
                               b in proptest::collection::vec((0u32..3, 0u32..3, 0u32..2, -3i64..4), 1..5)) {
            let build = |v: &[(u32, u32, u32, i64)]| {
                let mut p = XYPolynomial::zero();
                for &(e1, e2, f1, c) in v {
                    p.add_term(Monomial::new(vec![e1, e2], vec![f1]), &q(c, 1));
                }
                p
            };
            let (pa, pb) = (build(&a), build(&b));
            let prod = xpoly_mul(&pa, &pb, 100);
            // every kept monomial factors as a sum of weights of operand monomials
            for (m, _) in prod.terms() {
                let ok = pa.terms().any(|(ma, _)| pb.terms().any(|(mb, _)| {
                    ma.mul(mb) == *m && m.weight() == ma.weight() + mb.weight()
                }));
                proptest::prop_assert!(ok);
            }
        }
    }
}
