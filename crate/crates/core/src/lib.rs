//! Exact rational linear algebra for zeon tensor powers (permanental
//! compounds) of matrices, the degree-2 zeon identities, and a determinant
//! test for ergodicity of finite Markov chains.
//!
//! Every computation is carried out over the rationals; there is no floating
//! point anywhere in the crate. Vectors follow the row-vector convention:
//! a vector `v` acts on a matrix `A` from the left as `v·A`.

pub mod degree2;
pub mod error;
pub mod linalg;
pub mod markov;
pub mod rational;
pub mod zeon;

pub use degree2::{DegreeTwoVector, HollowSymmetric};
pub use error::{Error, Result};
pub use linalg::{BoolMatrix, Matrix};
pub use markov::{ChainStructure, ErgodicityReport, StochasticMatrix, Verdict};
pub use rational::Rational;
pub use zeon::{FunctionMap, MultiIndexBasis};
