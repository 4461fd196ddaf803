//! Finite Markov chains: classical structure (communicating classes,
//! periods, quasi-positivity, invariant vectors, limits) and the determinant
//! test `det(I − Ψ₂(A)) ≠ 0` with its fixed-vector witnesses.

mod criterion;
mod harness;
mod structure;
mod witness;

use num_traits::{One, Signed};

pub use criterion::{
    ergodic_limit, invariant_distributions, is_quasi_positive, zeon_criterion, zeon_determinant, ErgodicityReport,
    InvariantSpace, Verdict,
};
pub use harness::{
    check_equivalence, equivalence_harness, exhaustive_function_chains, random_recurrent_chain, Counterexample,
    HarnessReport,
};
pub use structure::{chain_structure, ChainStructure, CommunicatingClass};
pub use witness::{witness_periodic, witness_reducible};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A square matrix with nonnegative entries and unit row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StochasticMatrix(Matrix);

impl StochasticMatrix {
    /// Validates `m`; errors carry one-based positions and the exact row sum.
    pub fn new(m: Matrix) -> Result<Self> {
        m.require_square()?;
        for (i, row) in m.row_iter().enumerate() {
            if let Some((j, v)) = row.iter().enumerate().find(|(_, v)| v.is_negative()) {
                return Err(Error::NegativeEntry {
                    row: i + 1,
                    col: j + 1,
                    value: v.clone(),
                });
            }
            let sum: Rational = row.iter().sum();
            if !sum.is_one() {
                return Err(Error::RowSumNotOne { row: i + 1, sum });
            }
        }
        Ok(Self(m))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

impl TryFrom<Matrix> for StochasticMatrix {
    type Error = Error;

    fn try_from(m: Matrix) -> Result<Self> {
        Self::new(m)
    }
}

impl AsRef<Matrix> for StochasticMatrix {
    fn as_ref(&self) -> &Matrix {
        &self.0
    }
}

/// Same as [`StochasticMatrix::new`].
pub fn validate_stochastic(m: Matrix) -> Result<StochasticMatrix> {
    StochasticMatrix::new(m)
}
