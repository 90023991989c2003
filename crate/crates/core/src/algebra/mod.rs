//! Exact coefficient arithmetic: `Z[t]`, `Q[t]`, graded polynomials in the
//! `x`/`y` coordinates, and an exact linear solver.

mod linsolve;
mod tpoly;
mod xypoly;

use thiserror::Error;

pub use linsolve::{solve_exact_linear_system, solve_many, SolveError};
pub use tpoly::{tpoly_divexact, tpoly_mul, QtPoly, TPoly};
pub use xypoly::{
    determinant, exponential_coefficient, h_in, h_poly, xpoly_mul, Family, Monomial, XYPolynomial,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend in Z[t]")]
    NonzeroRemainder,
}
