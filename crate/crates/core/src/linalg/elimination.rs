use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Matrix;
use crate::error::Result;
use crate::rational::{common_denominator, Rational};

/// Bareiss elimination on the row-scaled integer matrix.
///
/// Each row is multiplied by the lcm of its denominators, so every
/// intermediate value is an integer minor; the scaling is divided back out
/// at the end. Pivot: first nonzero entry in the current column.
pub(super) fn determinant(m: &Matrix) -> Result<Rational> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .row_iter()
        .map(|row| {
            let d = common_denominator(row);
            let ints = row
                .iter()
                .map(|v| (v * Rational::from_integer(d.clone())).to_integer())
                .collect();
            scale *= &d;
            ints
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Ok(Rational::new(det, scale))
}

/// Reduced row-echelon form and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let reduced = Matrix::from_rows(a).expect("rref preserves shape");
    (reduced, pivots)
}

/// Basis of `{x : m·x = 0}` in reduced row-echelon form.
pub(super) fn null_space_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let cols = m.cols();
    let (reduced, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Vec::new();
    }
    let raw: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(row, f)].clone();
            }
            v
        })
        .collect();
    let basis = Matrix::from_rows(raw).expect("equal-length basis vectors");
    let (canonical, _) = rref(&basis);
    canonical.to_rows()
}
