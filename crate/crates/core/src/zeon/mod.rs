//! Zeon tensor powers of matrices and the function-matrix representation.
//!
//! For an `n×n` matrix `W`, the `k`-th zeon power `Ψ_k(W)` acts on the degree-`k`
//! component of the zeon algebra (generators commute and square to zero). In
//! the basis of `k`-subsets, its `(I, J)` entry is the permanent of `W`
//! restricted to rows `I` and columns `J`. Dropping the permanent's sign
//! pattern turns it into the `k`-th exterior (determinantal) compound.

mod function;
mod permanent;
mod subsets;

pub use function::FunctionMap;
pub use permanent::permanent;
pub use subsets::{binomial, MultiIndexBasis};

use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational::Rational;

/// `Ψ_k(W)` over the lexicographic `k`-subset basis.
pub fn zeon_power(w: &Matrix, k: usize) -> Result<Matrix> {
    compound(w, k, |sub| permanent(sub).expect("square submatrix"))
}

/// The `k`-th exterior power `W^{∧k}`: minors in place of permanents.
pub fn exterior_power(w: &Matrix, k: usize) -> Result<Matrix> {
    compound(w, k, |sub| sub.determinant().expect("square submatrix"))
}

fn compound(w: &Matrix, k: usize, cell: impl Fn(&Matrix) -> Rational) -> Result<Matrix> {
    let n = w.require_square()?;
    let basis = MultiIndexBasis::new(n, k)?;
    let subsets = basis.subsets();
    let size = basis.len();
    if k == 1 {
        return Ok(w.clone());
    }
    Ok(Matrix::from_fn(size, size, |r, c| {
        cell(&w.submatrix(&subsets[r], &subsets[c]))
    }))
}

/// Whether `Ψ_k(W₁W₂) = Ψ_k(W₁)·Ψ_k(W₂)` holds exactly.
pub fn is_zeon_homomorphic_pair(w1: &Matrix, w2: &Matrix, k: usize) -> Result<bool> {
    let n = w1.require_square()?;
    w2.require_shape(n, n)?;
    let lhs = zeon_power(&(w1 * w2), k)?;
    let rhs = &zeon_power(w1, k)? * &zeon_power(w2, k)?;
    Ok(lhs == rhs)
}

/// Second quantization of `f` applied to a zero-based, strictly increasing subset.
pub fn apply_second_quantized_function(f: &FunctionMap, subset: &[usize]) -> Option<Vec<usize>> {
    f.apply_to_subset(subset)
}
