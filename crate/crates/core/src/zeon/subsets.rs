use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The `k`-subsets of `{0, …, n−1}` in lexicographic order.
///
/// Subsets are stored zero-based and strictly increasing; [`label`] renders
/// the one-based tuple, e.g. `(2,4)`.
///
/// [`label`]: MultiIndexBasis::label
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndexBasis {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

impl MultiIndexBasis {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::DegreeOutOfRange { k, n });
        }
        let total = binomial(n, k);
        let mut subsets = Vec::with_capacity(total);
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            subsets.push(current.clone());
            // Rightmost position that can still advance.
            let Some(pos) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
                break;
            };
            current[pos] += 1;
            for i in pos + 1..k {
                current[i] = current[i - 1] + 1;
            }
        }
        debug_assert_eq!(subsets.len(), total);
        Ok(Self { n, k, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.subsets.iter().map(Vec::as_slice)
    }

    /// Lexicographic rank of a strictly increasing zero-based subset.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let valid = subset.len() == self.k
            && subset.windows(2).all(|w| w[0] < w[1])
            && subset.last().is_none_or(|&x| x < self.n);
        if !valid {
            return Err(Error::InvalidSubset {
                subset: subset.to_vec(),
                n: self.n,
            });
        }
        // Count subsets that precede `subset`: at each position, every smaller
        // admissible value contributes C(n - v - 1, k - pos - 1) completions.
        let mut r = 0;
        let mut lo = 0;
        for (pos, &x) in subset.iter().enumerate() {
            for v in lo..x {
                r += binomial(self.n - v - 1, self.k - pos - 1);
            }
            lo = x + 1;
        }
        Ok(r)
    }

    pub fn unrank(&self, r: usize) -> Option<&[usize]> {
        self.subsets.get(r).map(Vec::as_slice)
    }

    /// One-based tuple label, e.g. `(1,3)`.
    pub fn label(&self, r: usize) -> String {
        let inner: Vec<String> = self.subsets[r].iter().map(|i| (i + 1).to_string()).collect();
        format!("({})", inner.join(","))
    }
}
