use std::fmt;

/// Zero/nonzero pattern of a nonnegative matrix.
///
/// For nonnegative `M`, `N` the pattern of `M·N` is the boolean product of
/// the two patterns, so powers can be tracked here without rational growth.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let bits = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self { rows, cols, bits }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn all(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    /// Boolean product; panics on inner-dimension mismatch.
    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, other.rows, "boolean product shape mismatch");
        let mut out = vec![false; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if !self.get(i, k) {
                    continue;
                }
                for j in 0..other.cols {
                    if other.get(k, j) {
                        out[i * other.cols + j] = true;
                    }
                }
            }
        }
        BoolMatrix {
            rows: self.rows,
            cols: other.cols,
            bits: out,
        }
    }

    pub fn power(&self, e: u64) -> BoolMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square pattern");
        let mut result = BoolMatrix::identity(self.rows);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Smallest `m` in `1..=max_exp` whose boolean power is all ones.
    pub fn first_positive_power(&self, max_exp: u64) -> Option<u64> {
        assert_eq!(self.rows, self.cols, "power of a non-square pattern");
        if self.rows == 0 {
            return None;
        }
        let mut current = self.clone();
        for m in 1..=max_exp {
            if current.all() {
                return Some(m);
            }
            if m < max_exp {
                current = current.mul(self);
            }
        }
        None
    }
}

/// `n² − 2n + 2`: any primitive `n×n` nonnegative matrix is positive by this power.
pub fn wielandt_bound(n: usize) -> u64 {
    let n = n as u64;
    if n == 0 {
        return 0;
    }
    (n - 1) * (n - 1) + 1
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
