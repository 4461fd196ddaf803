//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use zeon_core::linalg::mat;
use zeon_core::rational::Rational;
use zeon_core::{Matrix, StochasticMatrix};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Matrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::from_integer(1.into());
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut total = Rational::from_integer(0.into());
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = cofactor_det(&m.submatrix(&rows, &cols));
        let term = &m[(0, j)] * minor;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// All permutations of `0..n` (Heap's algorithm is unnecessary at this size).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `Σ_σ Π_i m[i][σ(i)]` over all permutations.
pub fn permutation_sum_permanent(m: &Matrix) -> Rational {
    permutations(m.rows())
        .iter()
        .map(|p| p.iter().enumerate().map(|(i, &j)| &m[(i, j)]).product::<Rational>())
        .sum()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.random_range(-6..=6);
    let den: i64 = rng.random_range(1..=5);
    Rational::new(num.into(), den.into())
}

pub fn random_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |_, _| random_rational(rng))
}

pub fn random_nonnegative_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |_, _| {
        if rng.random_bool(0.3) {
            Rational::from_integer(0.into())
        } else {
            Rational::new(rng.random_range(1..=6i64).into(), rng.random_range(1..=4i64).into())
        }
    })
}

/// Dense or sparse stochastic matrix with small-integer weights.
pub fn random_stochastic(n: usize, rng: &mut impl Rng) -> StochasticMatrix {
    let mut rows = Vec::new();
    for _ in 0..n {
        let mut w: Vec<i64> = (0..n)
            .map(|_| {
                if rng.random_bool(0.35) {
                    0
                } else {
                    rng.random_range(1..=5)
                }
            })
            .collect();
        if w.iter().all(|&x| x == 0) {
            w[rng.random_range(0..n)] = 1;
        }
        let total: i64 = w.iter().sum();
        rows.push(w.into_iter().map(|x| Rational::new(x.into(), total.into())).collect());
    }
    StochasticMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

pub fn example1() -> Matrix {
    mat(&[&["1/4", "1/4", "1/2"], &["1/4", "1/4", "1/2"], &["0", "0", "1"]])
}

pub fn example2() -> Matrix {
    mat(&[
        &["1/2", "1/2", "0", "0"],
        &["0", "1", "0", "0"],
        &["0", "1/2", "0", "1/2"],
        &["0", "0", "0", "1"],
    ])
}

pub fn example3() -> Matrix {
    mat(&[
        &["1/2", "1/2", "0", "0", "0"],
        &["1/2", "1/2", "0", "0", "0"],
        &["0", "0", "0", "1/2", "1/2"],
        &["0", "0", "1/2", "0", "1/2"],
        &["0", "0", "1/2", "1/2", "0"],
    ])
}

pub fn example4() -> Matrix {
    mat(&[
        &["0", "1", "0", "0", "0"],
        &["0", "0", "1/2", "1/2", "0"],
        &["0", "0", "0", "0", "1"],
        &["0", "0", "0", "0", "1"],
        &["1", "0", "0", "0", "0"],
    ])
}

pub fn example5() -> Matrix {
    mat(&[
        &["0", "1", "0", "0", "0", "0"],
        &["0", "0", "0", "0", "1", "0"],
        &["0", "0", "0", "1", "0", "0"],
        &["0", "0", "1", "0", "0", "0"],
        &["0", "1/2", "0", "0", "0", "1/2"],
        &["1", "0", "0", "0", "0", "0"],
    ])
}

/// `X̂` from a symbolic template: each cell names a parameter index
/// (`0` for a structural zero).
pub fn template(cells: &[&[usize]], params: &[Rational]) -> Matrix {
    let n = cells.len();
    Matrix::from_fn(n, n, |i, j| match cells[i][j] {
        0 => Rational::from_integer(0.into()),
        k => params[k - 1].clone(),
    })
}
