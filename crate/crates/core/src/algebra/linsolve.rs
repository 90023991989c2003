//! Exact solver for `sum_i s_i * column_i = target` with coefficients in `Q[t]`
//! and solutions required to lie in `Z[t]`.
//!
//! Each equation is first scaled by the inverse of its `Q[t]`-content and then
//! cleared of denominators, so elimination runs in `Z[t]`. Forward
//! elimination is fraction-free (Bareiss): every division is exact. Back
//! substitution uses exact division as well, which fails exactly when a
//! solution coordinate is not in `Z[t]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{QtPoly, TPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("columns are linearly dependent (no pivot in column {0})")]
    Singular(usize),
    #[error("solution coordinate {0} is not in Z[t]")]
    NotPolynomial(usize),
}

/// Remainder of `a` modulo `b` in `Q[t]`.
fn qt_rem(a: &QtPoly, b: &QtPoly) -> QtPoly {
    let bc = b.coeffs();
    let lead = bc.last().expect("division by zero polynomial");
    let mut r: Vec<BigRational> = a.coeffs().to_vec();
    while r.len() >= bc.len() {
        let top = r.last().unwrap().clone();
        let shift = r.len() - bc.len();
        if !top.is_zero() {
            let q = &top / lead;
            for (j, d) in bc.iter().enumerate() {
                r[shift + j] -= &q * d;
            }
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    QtPoly::from_coeffs(r)
}

fn monic(p: &QtPoly) -> QtPoly {
    match p.coeffs().last() {
        Some(l) => p.scale(&l.recip()),
        None => QtPoly::zero(),
    }
}

/// Monic gcd in `Q[t]`; zero only when both inputs are zero.
pub(crate) fn qt_gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = qt_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// Exact division in `Q[t]`; the caller guarantees divisibility.
fn qt_div(a: &QtPoly, b: &QtPoly) -> QtPoly {
    let bc = b.coeffs();
    let lead = bc.last().expect("division by zero polynomial");
    let mut r: Vec<BigRational> = a.coeffs().to_vec();
    if r.len() < bc.len() {
        return QtPoly::zero();
    }
    let mut q = vec![BigRational::zero(); r.len() - bc.len() + 1];
    for k in (0..q.len()).rev() {
        let c = &r[k + bc.len() - 1] / lead;
        for (j, d) in bc.iter().enumerate() {
            r[k + j] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    QtPoly::from_coeffs(q)
}

/// Scales an equation by a nonzero element of `Q(t)` so that its entries are
/// coprime polynomials in `Z[t]` with coprime integer coefficients.
fn normalize_row(row: &[QtPoly]) -> Vec<TPoly> {
    let content = row
        .iter()
        .filter(|p| !p.is_zero())
        .fold(QtPoly::zero(), |g, p| if g.is_zero() { monic(p) } else { qt_gcd(&g, p) });
    if content.is_zero() {
        return vec![TPoly::zero(); row.len()];
    }
    let reduced: Vec<QtPoly> = row.iter().map(|p| qt_div(p, &content)).collect();
    let denom = reduced.iter().fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
    let scale = BigRational::from_integer(denom);
    let ints: Vec<TPoly> = reduced
        .iter()
        .map(|p| p.scale(&scale).to_integer_poly().expect("denominators cleared"))
        .collect();
    let g = ints
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter()
        .map(|p| TPoly::from_coeffs(p.coeffs().iter().map(|c| c / &g).collect()))
        .collect()
}

/// Solves `sum_i s_i * columns[i] = target` exactly.
///
/// Every column and the target must have the same length (the number of
/// equations). The columns must be linearly independent.
pub fn solve_exact_linear_system(
    columns: &[Vec<QtPoly>],
    target: &[QtPoly],
) -> Result<Vec<TPoly>, SolveError> {
    let mut sols = solve_many(columns, std::slice::from_ref(&target.to_vec()))?;
    Ok(sols.pop().expect("one right-hand side"))
}

/// Like [`solve_exact_linear_system`] for several right-hand sides sharing one
/// elimination.
pub fn solve_many(
    columns: &[Vec<QtPoly>],
    targets: &[Vec<QtPoly>],
) -> Result<Vec<Vec<TPoly>>, SolveError> {
    let ncols = columns.len();
    let nrhs = targets.len();
    let nrows = targets
        .first()
        .map(Vec::len)
        .or_else(|| columns.first().map(Vec::len))
        .unwrap_or(0);
    if columns.iter().any(|c| c.len() != nrows) || targets.iter().any(|t| t.len() != nrows) {
        return Err(SolveError::Inconsistent("column and target lengths differ".into()));
    }
    if ncols > nrows {
        return Err(SolveError::Inconsistent(format!(
            "{ncols} unknowns but only {nrows} equations"
        )));
    }
    let width = ncols + nrhs;

    let mut m: Vec<Vec<TPoly>> = (0..nrows)
        .map(|r| {
            let row: Vec<QtPoly> = columns
                .iter()
                .map(|c| c[r].clone())
                .chain(targets.iter().map(|t| t[r].clone()))
                .collect();
            normalize_row(&row)
        })
        .collect();

    let mut prev = TPoly::one();
    for k in 0..ncols {
        // pivot of smallest degree, then smallest leading coefficient
        let pivot = (k..nrows)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| (m[r][k].degree(), m[r][k].leading().map(|c| c.abs())))
            .ok_or(SolveError::Singular(k))?;
        m.swap(k, pivot);
        for i in k + 1..nrows {
            if m[i][k].is_zero() {
                // row i is already reduced in this column; still rescale by pivot/prev
                for j in k + 1..width {
                    if !m[i][j].is_zero() {
                        m[i][j] = (&m[k][k] * &m[i][j])
                            .div_exact(&prev)
                            .expect("Bareiss division is exact");
                    }
                }
                continue;
            }
            for j in k + 1..width {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = TPoly::zero();
        }
        prev = m[k][k].clone();
    }

    for row in m.iter().skip(ncols) {
        if let Some(j) = (ncols..width).find(|&j| !row[j].is_zero()) {
            return Err(SolveError::Inconsistent(format!(
                "right-hand side {} is outside the span of the columns",
                j - ncols
            )));
        }
    }

    let mut out = Vec::with_capacity(nrhs);
    for r in 0..nrhs {
        let mut x = vec![TPoly::zero(); ncols];
        for k in (0..ncols).rev() {
            let mut acc = m[k][ncols + r].clone();
            for j in k + 1..ncols {
                acc = &acc - &(&m[k][j] * &x[j]);
            }
            x[k] = acc.div_exact(&m[k][k]).map_err(|_| SolveError::NotPolynomial(k))?;
        }
        out.push(x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(c: &[i64]) -> QtPoly {
        TPoly::from_i64s(c).to_qt()
    }

    #[test]
    fn identity_system() {
        let cols: Vec<Vec<QtPoly>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { tp(&[1]) } else { QtPoly::zero() }).collect())
            .collect();
        let target = vec![QtPoly::zero(), tp(&[1]), QtPoly::zero()];
        let x = solve_exact_linear_system(&cols, &target).unwrap();
        assert_eq!(x, vec![TPoly::zero(), TPoly::one(), TPoly::zero()]);
    }

    #[test]
    fn shape_guard() {
        let cols = vec![vec![tp(&[1])], vec![tp(&[0, 1])]];
        let err = solve_exact_linear_system(&cols, &[tp(&[1, 1])]).unwrap_err();
        assert!(matches!(err, SolveError::Inconsistent(_)));
        let err = solve_exact_linear_system(&[vec![tp(&[1])]], &[tp(&[1]), tp(&[1])]).unwrap_err();
        assert!(matches!(err, SolveError::Inconsistent(_)));
    }

    #[test]
    fn outside_span_and_dependent() {
        // column (1, 0); target (0, 1)
        let cols = vec![vec![tp(&[1]), QtPoly::zero()]];
        let err = solve_exact_linear_system(&cols, &[QtPoly::zero(), tp(&[1])]).unwrap_err();
        assert!(matches!(err, SolveError::Inconsistent(_)));
        let cols = vec![vec![tp(&[1]), tp(&[1])], vec![tp(&[2]), tp(&[2])]];
        let err = solve_exact_linear_system(&cols, &[tp(&[1]), tp(&[1])]).unwrap_err();
        assert_eq!(err, SolveError::Singular(1));
    }

    #[test]
    fn non_polynomial_solution() {
        // (1 - t) * s = 1  has no solution in Z[t]
        let err = solve_exact_linear_system(&[vec![tp(&[1, -1])]], &[tp(&[1])]).unwrap_err();
        assert_eq!(err, SolveError::NotPolynomial(0));
        // 2 s = 1
        let err = solve_exact_linear_system(&[vec![tp(&[2])]], &[tp(&[1])]).unwrap_err();
        assert_eq!(err, SolveError::NotPolynomial(0));
    }

    #[test]
    fn rational_rows_and_polynomial_solution() {
        // rows: (1/2) s0 + t s1 = (1/2)(1+t) + t(1-t);  s0 - s1 = (1+t) - (1-t)
        let half = BigRational::new(1.into(), 2.into());
        let cols = vec![
            vec![QtPoly::from_rational(half.clone()), tp(&[1])],
            vec![tp(&[0, 1]), tp(&[-1])],
        ];
        let s0 = TPoly::from_i64s(&[1, 1]);
        let s1 = TPoly::from_i64s(&[1, -1]);
        let target = vec![
            &s0.to_qt().scale(&half) + &(&tp(&[0, 1]) * &s1.to_qt()),
            &s0.to_qt() - &s1.to_qt(),
        ];
        assert_eq!(solve_exact_linear_system(&cols, &target).unwrap(), vec![s0, s1]);
    }

    #[test]
    fn gcd_basics() {
        let a = tp(&[-1, 0, 1]); // (t-1)(t+1)
        let b = tp(&[1, -2, 1]); // (t-1)^2
        assert_eq!(qt_gcd(&a, &b), tp(&[-1, 1]));
        assert_eq!(qt_gcd(&QtPoly::zero(), &b.scale(&BigRational::from_integer(3.into()))), b);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn solve_inverts_forward_combination(
            entries in proptest::collection::vec(proptest::collection::vec(-3i64..4, 0..3), 9),
            sol in proptest::collection::vec(proptest::collection::vec(-3i64..4, 0..3), 3),
        ) {
            // 3 unknowns, 3 equations, random Z[t] entries; skip singular draws
            let cols: Vec<Vec<QtPoly>> = (0..3).map(|c| (0..3).map(|r| tp(&entries[c * 3 + r])).collect()).collect();
            let sol: Vec<TPoly> = sol.iter().map(|s| TPoly::from_i64s(s)).collect();
            let target: Vec<QtPoly> = (0..3).map(|r| {
                (0..3).fold(QtPoly::zero(), |acc, c| &acc + &(&cols[c][r] * &sol[c].to_qt()))
            }).collect();
            match solve_exact_linear_system(&cols, &target) {
                Ok(x) => proptest::prop_assert_eq!(x, sol),
                Err(SolveError::Singular(_)) => {}
                Err(e) => proptest::prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
