//! Exact structure constants for Schur functions, Hall-Littlewood functions
//! and universal characters.
//!
//! Products are expanded with raising-operator series ([`engine`]) and the
//! resulting index vectors are straightened back into a basis ([`schur`],
//! [`hall_littlewood`], [`universal`]). Each product has an independent
//! check: tableaux counting, linear algebra on coordinate expansions, the ψ
//! formula, or the Koike formula. All arithmetic is exact.

pub mod algebra;
pub mod cli;
pub mod engine;
pub mod hall_littlewood;
pub mod oracle;
pub mod partition;
pub mod schur;
pub mod universal;

use thiserror::Error;

pub use algebra::{QtPoly, TPoly, XYPolynomial};
pub use engine::{FormalSum, IndexVector, SeriesKind, TranslationSeries};
pub use hall_littlewood::HLSum;
pub use partition::Partition;
pub use schur::SchurSum;
pub use universal::{UCIndex, UCSum};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Engine(#[from] engine::EngineError),
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    Solve(#[from] algebra::SolveError),
    #[error(transparent)]
    Partition(#[from] partition::PartitionError),
    #[error("straightening ran out of fuel after {steps} rewrite steps")]
    FuelExhausted { steps: u64 },
    #[error("invariant violated: {0}")]
    Invariant(String),
}
