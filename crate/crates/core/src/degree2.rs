//! The degree-2 component of the zeon algebra.
//!
//! A vector `X ∈ Q^C(n,2)` has coordinates `x_ij` for `i < j`, ordered
//! lexicographically like the pair basis of [`zeon_power`](crate::zeon::zeon_power)
//! at `k = 2`. Its embedding `X̂` is the symmetric matrix with zero diagonal and
//! `X̂_ij = X̂_ji = x_ij`; the inner product is `⟨X,Y⟩ = tr X̂Ŷ`.
//!
//! For a square `A`, the row action `X·Ψ₂(A)` and column action `Ψ₂(A)·X†`
//! are computed here from the pair-sum formulas. The remaining operations
//! evaluate the matrix-algebra side of the basic relations, the trace
//! identities, and integration by parts, so that each identity can be
//! checked as an exact equality between two independent computations.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::markov::StochasticMatrix;
use crate::rational::{self, Rational};

/// Lexicographic position of the pair `(i, j)`, `i < j`, among the pairs of `{0..n}`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeTwoVector {
    n: usize,
    #[serde(with = "rational::serde_vec")]
    coords: Vec<Rational>,
}

impl DegreeTwoVector {
    pub fn new(n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: format!("{} coordinates for n = {n}", n * n.saturating_sub(1) / 2),
                found: format!("{}", coords.len()),
            });
        }
        Ok(Self { n, coords })
    }

    /// Infers `n` from the coordinate count.
    pub fn from_coords(coords: Vec<Rational>) -> Result<Self> {
        let len = coords.len();
        let n = (1..=len + 2)
            .find(|n| n * (n - 1) / 2 == len)
            .ok_or(Error::BadDegreeTwoLength { len })?;
        Self::new(n, coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            coords: vec![Rational::zero(); n * n.saturating_sub(1) / 2],
        }
    }

    /// Builds `X` from a function of the zero-based pair `(i, j)`, `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self {
            n,
            coords: pairs(n).map(|(i, j)| f(i, j)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coords[pair_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.coords[pair_index(self.n, j, i)].clone(),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|v| !v.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            coords: self.coords.iter().map(|v| v * c).collect(),
        }
    }

    /// `X` as a `1×C(n,2)` row vector.
    pub fn as_row(&self) -> Matrix {
        Matrix::row_vector(self.coords.clone())
    }

    /// `X†` as a `C(n,2)×1` column vector.
    pub fn as_column(&self) -> Matrix {
        Matrix::column_vector(self.coords.clone())
    }

    fn check_matrix(&self, a: &Matrix) -> Result<()> {
        a.require_shape(self.n, self.n)
    }

    fn check_same_n(&self, other: &DegreeTwoVector) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!("n = {}", self.n),
                found: format!("n = {}", other.n),
            })
        }
    }
}

/// A symmetric matrix with zero diagonal: the image `X̂` of the embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HollowSymmetric(Matrix);

impl HollowSymmetric {
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

impl TryFrom<Matrix> for HollowSymmetric {
    type Error = Error;

    fn try_from(m: Matrix) -> Result<Self> {
        let n = m.require_square().map_err(|_| Error::NotHollowSymmetric {
            reason: format!("shape {}x{}", m.rows(), m.cols()),
        })?;
        for i in 0..n {
            if !m[(i, i)].is_zero() {
                return Err(Error::NotHollowSymmetric {
                    reason: format!("nonzero diagonal entry at ({},{})", i + 1, i + 1),
                });
            }
            for j in i + 1..n {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotHollowSymmetric {
                        reason: format!("entries ({},{}) and ({},{}) differ", i + 1, j + 1, j + 1, i + 1),
                    });
                }
            }
        }
        Ok(Self(m))
    }
}

/// `X ↦ X̂`.
pub fn mat_embed(x: &DegreeTwoVector) -> HollowSymmetric {
    HollowSymmetric(Matrix::from_fn(x.n, x.n, |i, j| x.get(i, j)))
}

/// Reads the strict upper triangle of `X̂` back into `X`.
pub fn unmat(h: &HollowSymmetric) -> DegreeTwoVector {
    let m = h.matrix();
    DegreeTwoVector::from_fn(h.n(), |i, j| m[(i, j)].clone())
}

/// `⟨X,Y⟩ = tr X̂Ŷ = 2 Σ_{i<j} x_ij y_ij`.
pub fn inner_product(x: &DegreeTwoVector, y: &DegreeTwoVector) -> Result<Rational> {
    x.check_same_n(y)?;
    let half: Rational = x.coords.iter().zip(&y.coords).map(|(a, b)| a * b).sum();
    Ok(half * Rational::from_integer(2.into()))
}

/// `X·u† = Σ x_ij`, which equals `½ tr X̂J`.
pub fn sum_against_u(x: &DegreeTwoVector) -> Rational {
    x.coords.iter().sum()
}

/// `X·Ψ₂(A)`: `(XΨ₂(A))_ij = Σ_{λ<μ} x_λμ (A_λi A_μj + A_μi A_λj)`.
pub fn left_action(x: &DegreeTwoVector, a: &Matrix) -> Result<DegreeTwoVector> {
    x.check_matrix(a)?;
    let n = x.n;
    Ok(DegreeTwoVector::from_fn(n, |i, j| {
        pairs(n)
            .zip(&x.coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|((l, m), v)| v * (&a[(l, i)] * &a[(m, j)] + &a[(m, i)] * &a[(l, j)]))
            .sum()
    }))
}

/// `Ψ₂(A)·X†`: `(Ψ₂(A)X†)_ij = Σ_{λ<μ} x_λμ (A_iλ A_jμ + A_iμ A_jλ)`.
pub fn right_action(a: &Matrix, x: &DegreeTwoVector) -> Result<DegreeTwoVector> {
    x.check_matrix(a)?;
    let n = x.n;
    Ok(DegreeTwoVector::from_fn(n, |i, j| {
        pairs(n)
            .zip(&x.coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|((l, m), v)| v * (&a[(i, l)] * &a[(j, m)] + &a[(i, m)] * &a[(j, l)]))
            .sum()
    }))
}

/// `D⁺`, with `D⁺_ii = 2 Σ_{λ<μ} x_λμ A_λi A_μi` (entries of `A` from column `i`).
pub fn diag_correction_plus(a: &Matrix, x: &DegreeTwoVector) -> Result<Matrix> {
    x.check_matrix(a)?;
    Ok(diag_correction(x, |l, m, i| &a[(l, i)] * &a[(m, i)]))
}

/// `D⁻`, with `D⁻_ii = 2 Σ_{λ<μ} x_λμ A_iλ A_iμ` (entries of `A` from row `i`).
pub fn diag_correction_minus(a: &Matrix, x: &DegreeTwoVector) -> Result<Matrix> {
    x.check_matrix(a)?;
    Ok(diag_correction(x, |l, m, i| &a[(i, l)] * &a[(i, m)]))
}

fn diag_correction(x: &DegreeTwoVector, term: impl Fn(usize, usize, usize) -> Rational) -> Matrix {
    let two = Rational::from_integer(2.into());
    let diag: Vec<Rational> = (0..x.n)
        .map(|i| {
            let s: Rational = pairs(x.n).zip(&x.coords).map(|((l, m), v)| v * term(l, m, i)).sum();
            s * &two
        })
        .collect();
    Matrix::diagonal(&diag)
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `A*X̂A`.
pub fn congruence_left(x: &DegreeTwoVector, a: &Matrix) -> Result<Matrix> {
    x.check_matrix(a)?;
    let xh = mat_embed(x);
    Ok(&(&a.transpose() * xh.matrix()) * a)
}

/// `AX̂A*`.
pub fn congruence_right(a: &Matrix, x: &DegreeTwoVector) -> Result<Matrix> {
    x.check_matrix(a)?;
    let xh = mat_embed(x);
    Ok(&(a * xh.matrix()) * &a.transpose())
}

/// `½ tr(X̂ A (J−I) A*)`, the value of `X·Ψ₂(A)·u†`.
pub fn trace_identity_left(x: &DegreeTwoVector, a: &Matrix) -> Result<Rational> {
    x.check_matrix(a)?;
    let n = x.n;
    let j_minus_i = &Matrix::ones(n, n) - &Matrix::identity(n);
    let inner = &(a * &j_minus_i) * &a.transpose();
    Ok((mat_embed(x).matrix() * &inner).trace() * half())
}

/// `½ tr(X̂ A* (J−I) A)`, the value of `u·Ψ₂(A)·X†`.
pub fn trace_identity_right(x: &DegreeTwoVector, a: &Matrix) -> Result<Rational> {
    x.check_matrix(a)?;
    let n = x.n;
    let j_minus_i = &Matrix::ones(n, n) - &Matrix::identity(n);
    let inner = &(&a.transpose() * &j_minus_i) * a;
    Ok((mat_embed(x).matrix() * &inner).trace() * half())
}

/// `½ tr(X̂ (J − AA*))`, the stochastic form of [`trace_identity_left`].
pub fn trace_identity_stochastic(x: &DegreeTwoVector, a: &StochasticMatrix) -> Result<Rational> {
    let a = a.matrix();
    x.check_matrix(a)?;
    let n = x.n;
    let inner = &Matrix::ones(n, n) - &(a * &a.transpose());
    Ok((mat_embed(x).matrix() * &inner).trace() * half())
}

/// Both sides of `X(I − Ψ₂(A))u† = ½ tr A*X̂A` for stochastic `A`.
///
/// The left side goes through the pair-sum action; the right side is the
/// trace of the congruence.
pub fn integration_by_parts(x: &DegreeTwoVector, a: &StochasticMatrix) -> Result<(Rational, Rational)> {
    let a = a.matrix();
    let moved = left_action(x, a)?;
    let lhs = sum_against_u(x) - sum_against_u(&moved);
    let rhs = congruence_left(x, a)?.trace() * half();
    Ok((lhs, rhs))
}

/// Both sides of the two general (non-stochastic) integration-by-parts identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpIdentities {
    /// `X(I − Ψ₂(A))u†`
    pub row_lhs: Rational,
    /// `½ tr(X̂(J − AJA* + AA*))`
    pub row_rhs: Rational,
    /// `u(I − Ψ₂(A))X†`
    pub column_lhs: Rational,
    /// `½ tr(X̂(J − A*JA + A*A))`
    pub column_rhs: Rational,
}

impl BpIdentities {
    pub fn holds(&self) -> bool {
        self.row_lhs == self.row_rhs && self.column_lhs == self.column_rhs
    }
}

pub fn general_bp_identities(x: &DegreeTwoVector, a: &Matrix) -> Result<BpIdentities> {
    x.check_matrix(a)?;
    let n = x.n;
    let total = sum_against_u(x);
    let row_lhs = &total - sum_against_u(&left_action(x, a)?);
    let column_lhs = &total - sum_against_u(&right_action(a, x)?);

    let xh = mat_embed(x);
    let j = Matrix::ones(n, n);
    let at = a.transpose();
    let row_inner = &(&j - &(&(a * &j) * &at)) + &(a * &at);
    let column_inner = &(&j - &(&(&at * &j) * a)) + &(&at * a);
    Ok(BpIdentities {
        row_lhs,
        row_rhs: (xh.matrix() * &row_inner).trace() * half(),
        column_lhs,
        column_rhs: (xh.matrix() * &column_inner).trace() * half(),
    })
}

/// Whether `X̂ = A*X̂A` entrywise.
pub fn is_left_congruence_fixed(x: &DegreeTwoVector, a: &Matrix) -> Result<bool> {
    Ok(&congruence_left(x, a)? == mat_embed(x).matrix())
}

/// Whether `X̂ = AX̂A*` entrywise.
pub fn is_right_congruence_fixed(a: &Matrix, x: &DegreeTwoVector) -> Result<bool> {
    Ok(&congruence_right(a, x)? == mat_embed(x).matrix())
}

/// The all-ones vector in `Q^C(n,2)`.
pub fn ones(n: usize) -> DegreeTwoVector {
    DegreeTwoVector::from_fn(n, |_, _| Rational::one())
}
