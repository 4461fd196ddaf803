use num_traits::Zero;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational::Rational;

/// Side length at which Ryser's formula takes over from direct expansion.
const RYSER_THRESHOLD: usize = 4;

/// Exact permanent of a square matrix.
pub fn permanent(m: &Matrix) -> Result<Rational> {
    let k = m.require_square()?;
    Ok(if k < RYSER_THRESHOLD { direct(m) } else { ryser(m) })
}

fn direct(m: &Matrix) -> Rational {
    match m.rows() {
        0 => Rational::from_integer(1.into()),
        1 => m[(0, 0)].clone(),
        2 => &m[(0, 0)] * &m[(1, 1)] + &m[(0, 1)] * &m[(1, 0)],
        3 => {
            let e = |i, j| &m[(i, j)];
            e(0, 0) * (e(1, 1) * e(2, 2) + e(1, 2) * e(2, 1))
                + e(0, 1) * (e(1, 0) * e(2, 2) + e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) + e(1, 1) * e(2, 0))
        }
        _ => unreachable!("direct expansion only below the Ryser threshold"),
    }
}

/// Ryser's inclusion–exclusion over column subsets, visited in Gray-code
/// order so each step updates the row sums by one column.
fn ryser(m: &Matrix) -> Rational {
    let k = m.rows();
    let mut row_sums = vec![Rational::zero(); k];
    let mut in_set = vec![false; k];
    let mut total = Rational::zero();
    for step in 1u64..(1u64 << k) {
        let col = step.trailing_zeros() as usize;
        let adding = !in_set[col];
        in_set[col] = adding;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += &m[(i, col)];
            } else {
                *s -= &m[(i, col)];
            }
        }
        let product: Rational = row_sums.iter().product();
        // Gray code of `step` has popcount(step ^ (step >> 1)) bits.
        let size = (step ^ (step >> 1)).count_ones() as usize;
        if (k - size).is_multiple_of(2) {
            total += product;
        } else {
            total -= product;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat;
    use crate::rational::int;

    #[test]
    fn small_cases() {
        assert_eq!(permanent(&mat(&[&["1", "1"], &["1", "1"]])).unwrap(), int(2));
        assert_eq!(permanent(&mat(&[&["1", "2"], &["3", "4"]])).unwrap(), int(10));
        for k in 0..7 {
            assert_eq!(permanent(&Matrix::identity(k)).unwrap(), int(1));
        }
        assert!(permanent(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn all_ones_gives_factorial() {
        let mut f = 1;
        for k in 1..=7 {
            f *= k;
            assert_eq!(permanent(&Matrix::ones(k, k)).unwrap(), int(f as i64));
        }
    }

    #[test]
    fn ryser_matches_direct_at_three() {
        let m = mat(&[&["1", "-2", "3/2"], &["0", "5", "1"], &["7", "1/3", "-1"]]);
        assert_eq!(ryser(&m), direct(&m));
    }
}
