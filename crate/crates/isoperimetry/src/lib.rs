//! Exact edge-isoperimetric computations on Cayley graphs of integer lattices.
//!
//! The crate is organized around one concrete solved instance and one
//! counterexample:
//!
//! * [`trilattice`] — the triangular lattice with edges at distance 1 and √3,
//!   a 12-regular Cayley graph whose edge-isoperimetric problem has a closed
//!   form `e(n)` and nested solutions;
//! * [`counterexample`] — the graph on `Z^d` generated by `{±e_i} ∪ {±2e_1}`,
//!   which has no nested solutions.
//!
//! Supporting machinery: [`lattice`] (points, generating sets, exact edge
//! counting), [`oracle`] (exhaustive branch-and-bound search on small
//! instances), [`polygon`] (the lattice 12-gon calculus: hulls, side
//! parameters, vertex-count and boundary formulas), [`verifier`] (the two
//! exhaustive case-enumeration checks, done in exact integer arithmetic), and
//! [`sequencer`] (the auxiliary move graph and the nested vertex ordering).
//!
//! Everything is exact: integer arithmetic throughout, no floating point in
//! any verified computation.

pub mod arith;
pub mod counterexample;
pub mod lattice;
pub mod oracle;
pub mod polygon;
pub mod sequencer;
pub mod trilattice;
pub mod verifier;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid generating set: {0}")]
    InvalidSpec(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// Search budget exhausted. Carries the exact number of sets explored and
    /// the best lower bound found so far, if any.
    #[error("budget exceeded after exploring {sets_explored} sets (best lower bound: {best_lower_bound:?})")]
    BudgetExceeded {
        sets_explored: u64,
        best_lower_bound: Option<u64>,
    },

    #[error("verification failure: {0}")]
    Verification(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inadmissible move: {0}")]
    InadmissibleMove(String),

    #[error("asset error: {0}")]
    Asset(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
