use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::criterion::{is_quasi_positive, zeon_determinant};
use super::structure::ChainStructure;
use super::StochasticMatrix;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::zeon::FunctionMap;

/// A chain on which the three ergodicity tests disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub matrix: Matrix,
    pub det_value: Rational,
    pub quasi_positive: bool,
    pub irreducible_aperiodic: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HarnessReport {
    pub evaluated: usize,
    /// Inputs skipped because they have transient states.
    pub skipped_transient: usize,
    pub ergodic: usize,
    pub reducible: usize,
    pub periodic: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, a: &StochasticMatrix) {
        let structure = ChainStructure::of(a);
        if structure.has_transients() {
            self.skipped_transient += 1;
            return;
        }
        self.evaluated += 1;
        if !structure.is_irreducible() {
            self.reducible += 1;
        } else if !structure.is_aperiodic() {
            self.periodic += 1;
        } else {
            self.ergodic += 1;
        }
        if let Some(c) = check_equivalence(a) {
            self.counterexamples.push(c);
        }
    }
}

/// Compares `det(I − Ψ₂(A)) ≠ 0`, quasi-positivity and irreducible-aperiodic
/// on one chain; `Some` when they disagree.
pub fn check_equivalence(a: &StochasticMatrix) -> Option<Counterexample> {
    let structure = ChainStructure::of(a);
    let det_value = zeon_determinant(a);
    let quasi_positive = is_quasi_positive(a).is_some();
    let irreducible_aperiodic = structure.is_irreducible() && structure.is_aperiodic();
    let det_nonzero = !det_value.is_zero();
    if det_nonzero == quasi_positive && quasi_positive == irreducible_aperiodic {
        None
    } else {
        Some(Counterexample {
            matrix: a.matrix().clone(),
            det_value,
            quasi_positive,
            irreducible_aperiodic,
        })
    }
}

/// Every function-matrix chain `M(f)` on `n` states. Chains with transient
/// states are counted as skipped.
pub fn exhaustive_function_chains(n: usize) -> HarnessReport {
    let mut report = HarnessReport::default();
    for f in FunctionMap::all(n) {
        let a = StochasticMatrix::new(f.matrix()).expect("function matrices are stochastic");
        report.record(&a);
    }
    report
}

/// Checks `samples` seeded random chains on `n ≤ 8` states with no
/// transient states. Deterministic for a given seed.
pub fn equivalence_harness(n: usize, samples: usize, seed: u64) -> Result<HarnessReport> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidArgument(format!("harness size n = {n} must be in 1..=8")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = HarnessReport::default();
    for _ in 0..samples {
        let a = random_recurrent_chain(n, &mut rng);
        report.record(&a);
    }
    Ok(report)
}

/// Random stochastic matrix whose communicating classes are all closed.
///
/// Rows are small nonnegative integers normalized by their sum. The support
/// is drawn from one of three shapes (unstructured, block-diagonal, cyclic)
/// so that ergodic, reducible and periodic chains all occur.
pub fn random_recurrent_chain(n: usize, rng: &mut impl Rng) -> StochasticMatrix {
    loop {
        let support = match rng.random_range(0..3) {
            0 => unstructured_support(n, rng),
            1 => block_support(n, rng),
            _ => cyclic_support(n, rng),
        };
        let a = weighted(&support, n, rng);
        if !ChainStructure::of(&a).has_transients() {
            return a;
        }
    }
}

fn unstructured_support(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    let density = rng.random_range(0.2..0.9);
    (0..n * n).map(|_| rng.random_bool(density)).collect()
}

fn block_support(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    let blocks = rng.random_range(1..=n.min(3));
    let label: Vec<usize> = (0..n).map(|_| rng.random_range(0..blocks)).collect();
    let density = rng.random_range(0.3..0.9);
    (0..n * n)
        .map(|idx| label[idx / n] == label[idx % n] && rng.random_bool(density))
        .collect()
}

fn cyclic_support(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    let p = rng.random_range(2..=n.clamp(2, 4));
    let label: Vec<usize> = (0..n).map(|_| rng.random_range(0..p)).collect();
    let density = rng.random_range(0.4..1.0);
    (0..n * n)
        .map(|idx| (label[idx / n] + 1) % p == label[idx % n] && rng.random_bool(density))
        .collect()
}

fn weighted(support: &[bool], n: usize, rng: &mut impl Rng) -> StochasticMatrix {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut weights: Vec<i64> = (0..n)
            .map(|j| if support[i * n + j] { rng.random_range(1..=4) } else { 0 })
            .collect();
        if weights.iter().all(|&w| w == 0) {
            weights[rng.random_range(0..n)] = 1;
        }
        let total: i64 = weights.iter().sum();
        rows.push(
            weights
                .into_iter()
                .map(|w| Rational::new(w.into(), total.into()))
                .collect(),
        );
    }
    StochasticMatrix::new(Matrix::from_rows(rows).expect("square")).expect("normalized rows")
}
