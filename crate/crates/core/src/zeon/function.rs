use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A self-map `f` of `{0, …, n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionMap {
    images: Vec<usize>,
}

impl FunctionMap {
    /// From zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some((index, &image)) = images.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::ImageOutOfRange {
                index: index + 1,
                image: image + 1,
                n,
            });
        }
        Ok(Self { images })
    }

    /// From one-based images, as functions on `{1..n}` are usually written.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if let Some((index, &image)) = images.iter().enumerate().find(|(_, &v)| v == 0 || v > n) {
            return Err(Error::ImageOutOfRange {
                index: index + 1,
                image,
                n,
            });
        }
        Ok(Self {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Right composition `f₁f₂`: first `self`, then `then`, i.e. `i ↦ then(self(i))`.
    pub fn compose(&self, then: &FunctionMap) -> FunctionMap {
        assert_eq!(self.n(), then.n(), "composing maps on different sets");
        FunctionMap {
            images: self.images.iter().map(|&i| then.images[i]).collect(),
        }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n()];
        self.images.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// All `n^n` maps, in odometer order.
    pub fn all(n: usize) -> impl Iterator<Item = FunctionMap> {
        let total = (n as u32).checked_pow(n as u32).map_or(0, |t| t as usize);
        (0..total).map(move |mut code| {
            let images = (0..n)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect();
            FunctionMap { images }
        })
    }

    /// `M(f)`: row `i` has its single 1 in column `f(i)`, so `e_i·M(f) = e_{f(i)}`.
    pub fn matrix(&self) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in self.images.iter().enumerate() {
            m[(i, j)] = Rational::one();
        }
        m
    }

    /// The induced map on subsets: `{i₁,…,i_k} ↦ {f(i₁),…,f(i_k)}`, or `None`
    /// when two elements collide (the product vanishes in the zeon algebra).
    pub fn apply_to_subset(&self, subset: &[usize]) -> Option<Vec<usize>> {
        let mut image: Vec<usize> = subset.iter().map(|&i| self.images[i]).collect();
        image.sort_unstable();
        if image.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(image)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat;

    #[test]
    fn identity_and_constant_maps() {
        assert_eq!(FunctionMap::identity(3).matrix(), Matrix::identity(3));
        let c = FunctionMap::from_one_based(&[1, 1]).unwrap();
        assert_eq!(c.matrix(), mat(&[&["1", "0"], &["1", "0"]]));
    }

    #[test]
    fn row_action_moves_basis_vectors() {
        let f = FunctionMap::from_one_based(&[3, 1, 1, 2]).unwrap();
        let m = f.matrix();
        for i in 0..4 {
            let mut e = vec![Rational::from_integer(0.into()); 4];
            e[i] = Rational::one();
            let moved = &Matrix::row_vector(e) * &m;
            for j in 0..4 {
                let expected = if j == f.apply(i) { 1 } else { 0 };
                assert_eq!(moved[(0, j)], Rational::from_integer(expected.into()));
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(FunctionMap::from_one_based(&[1, 3]).is_err());
        assert!(FunctionMap::from_one_based(&[0, 1]).is_err());
        assert!(FunctionMap::new(vec![0, 2]).is_err());
    }

    #[test]
    fn enumerates_all_maps() {
        assert_eq!(FunctionMap::all(3).count(), 27);
        assert_eq!(FunctionMap::all(3).filter(FunctionMap::is_permutation).count(), 6);
    }

    #[test]
    fn subset_images() {
        let id = FunctionMap::identity(4);
        assert_eq!(id.apply_to_subset(&[1, 3]), Some(vec![1, 3]));
        let c = FunctionMap::new(vec![2, 2, 2, 2]).unwrap();
        assert_eq!(c.apply_to_subset(&[0, 1]), None);
        assert_eq!(c.apply_to_subset(&[3]), Some(vec![2]));
        let swap = FunctionMap::new(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(swap.apply_to_subset(&[0, 2]), Some(vec![1, 3]));
    }
}
