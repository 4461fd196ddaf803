use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("degree k = {k} out of range 1..={n}")]
    DegreeOutOfRange { k: usize, n: usize },

    #[error("invalid subset {subset:?} for ground set of size {n}")]
    InvalidSubset { subset: Vec<usize>, n: usize },

    #[error("function image {image} out of range 1..={n} at position {index}")]
    ImageOutOfRange { index: usize, image: usize, n: usize },

    #[error("vector length {len} is not n(n-1)/2 for any valid n")]
    BadDegreeTwoLength { len: usize },

    #[error("matrix is not hollow symmetric: {reason}")]
    NotHollowSymmetric { reason: String },

    #[error("negative entry {value} at row {row}, column {col}")]
    NegativeEntry { row: usize, col: usize, value: Rational },

    #[error("row {row} sums to {sum}, expected 1")]
    RowSumNotOne { row: usize, sum: Rational },

    #[error("chain has {classes} communicating class(es); a reducibility witness needs at least 2")]
    TooFewClasses { classes: usize },

    #[error("chain has transient states {states:?}")]
    TransientStates { states: Vec<usize> },

    #[error("chain is not irreducible")]
    NotIrreducible,

    #[error("chain is aperiodic; no periodic witness exists")]
    Aperiodic,

    #[error("delta {delta} out of range 1..={max} for period {period}")]
    DeltaOutOfRange { delta: usize, max: usize, period: usize },

    #[error("chain is ergodic; no nonnegative fixed vector exists")]
    Ergodic,

    #[error("{0}")]
    InvalidArgument(String),
}
