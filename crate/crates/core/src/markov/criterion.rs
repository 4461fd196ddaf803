use num_traits::{One, Signed, Zero};

use super::structure::ChainStructure;
use super::witness::{witness_periodic, witness_reducible};
use super::StochasticMatrix;
use crate::degree2::DegreeTwoVector;
use crate::linalg::{wielandt_bound, Matrix};
use crate::rational::Rational;
use crate::zeon::zeon_power;

/// Smallest `m` with `A^m > 0`, searched up to the Wielandt bound, so `None`
/// means the chain is not quasi-positive.
pub fn is_quasi_positive(a: &StochasticMatrix) -> Option<u64> {
    a.matrix().pattern().first_positive_power(wielandt_bound(a.n()))
}

/// Left-invariant vectors `πA = π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSpace {
    /// Basis of the left null space of `A − I`, in reduced echelon form.
    pub basis: Vec<Vec<Rational>>,
    /// Some invariant vector is strictly positive. For a stochastic matrix
    /// this holds exactly when every communicating class is closed.
    pub has_positive: bool,
}

pub fn invariant_distributions(a: &StochasticMatrix) -> InvariantSpace {
    let m = a.matrix();
    let shifted = m - &Matrix::identity(a.n());
    let basis = shifted
        .left_null_space()
        .expect("square")
        .into_iter()
        .map(Matrix::into_entries)
        .collect();
    InvariantSpace {
        basis,
        has_positive: !ChainStructure::of(a).has_transients(),
    }
}

/// The stationary distribution of the closed class `states`, as a full-length vector.
fn class_distribution(a: &Matrix, states: &[usize]) -> Vec<Rational> {
    let k = states.len();
    let block = Matrix::from_fn(k, k, |i, j| {
        let v = a[(states[i], states[j])].clone();
        if i == j {
            v - Rational::one()
        } else {
            v
        }
    });
    let null = block.left_null_space().expect("square");
    debug_assert_eq!(
        null.len(),
        1,
        "an irreducible block has a one-dimensional invariant space"
    );
    let v = null[0].entries();
    let total: Rational = v.iter().sum();
    let mut out = vec![Rational::zero(); a.rows()];
    for (i, &s) in states.iter().enumerate() {
        out[s] = &v[i] / &total;
    }
    out
}

/// `lim Aⁿ`, computed exactly, or `None` when the powers oscillate.
///
/// The limit exists iff every closed class is aperiodic. Row `i` of the
/// limit is `Σ_C h_C(i) π_C`, where `π_C` is the stationary distribution of
/// the closed class `C` and `h_C(i)` is the probability of absorption in
/// `C` from `i` (solved on the transient block). For an ergodic chain this
/// is the rank-one `Ω = u†π`.
pub fn ergodic_limit(a: &StochasticMatrix) -> Option<Matrix> {
    let structure = ChainStructure::of(a);
    if !structure.is_aperiodic() {
        return None;
    }
    let m = a.matrix();
    let n = a.n();
    let transient = structure.transient_states();
    let t = transient.len();
    // I − Q on the transient block; nonsingular because the chain leaves it.
    let fundamental = Matrix::from_fn(t, t, |i, j| {
        let q = &m[(transient[i], transient[j])];
        if i == j {
            Rational::one() - q
        } else {
            -q.clone()
        }
    });

    let mut limit = Matrix::zeros(n, n);
    for class in structure.closed_classes() {
        let pi = class_distribution(m, &class.states);
        let mut weight = vec![Rational::zero(); n];
        for &s in &class.states {
            weight[s] = Rational::one();
        }
        if t > 0 {
            let into_class = Matrix::from_fn(t, 1, |i, _| class.states.iter().map(|&s| &m[(transient[i], s)]).sum());
            let h = fundamental
                .solve(&into_class)
                .expect("square")
                .expect("transient block is nonsingular");
            for (i, &s) in transient.iter().enumerate() {
                weight[s] = h[(i, 0)].clone();
            }
        }
        for i in 0..n {
            if weight[i].is_zero() {
                continue;
            }
            for &j in &class.states {
                limit[(i, j)] += &weight[i] * &pi[j];
            }
        }
    }
    Some(limit)
}

/// `det(I − Ψ₂(A))`. For `n < 2` the pair space is empty and the value is 1.
pub fn zeon_determinant(a: &StochasticMatrix) -> Rational {
    if a.n() < 2 {
        return Rational::one();
    }
    let psi = zeon_power(a.matrix(), 2).expect("n >= 2");
    (&Matrix::identity(psi.rows()) - &psi).determinant().expect("square")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Ergodic,
    NotErgodic,
    /// Transient states present, so no strictly positive invariant vector exists.
    CriterionInapplicable,
}

impl Verdict {
    /// CLI exit code: 0, 1, 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ergodic => 0,
            Verdict::NotErgodic => 1,
            Verdict::CriterionInapplicable => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Ergodic => "ergodic",
            Verdict::NotErgodic => "not-ergodic",
            Verdict::CriterionInapplicable => "criterion-inapplicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErgodicityReport {
    pub structure: ChainStructure,
    pub is_irreducible: bool,
    pub is_aperiodic: bool,
    pub quasi_positive_exponent: Option<u64>,
    pub has_positive_invariant: bool,
    pub det_value: Rational,
    pub criterion_verdict: Verdict,
    /// Nonnegative nonzero fixed vector of `Ψ₂(A)`, when one is known.
    pub witness: Option<DegreeTwoVector>,
    /// The stationary distribution, when it is unique.
    pub invariant_distribution: Option<Vec<Rational>>,
    pub limit_matrix: Option<Matrix>,
}

impl ErgodicityReport {
    /// The determinant, quasi-positivity and irreducible-aperiodic verdicts
    /// agree whenever the criterion applies.
    pub fn is_consistent(&self) -> bool {
        if !self.has_positive_invariant {
            return true;
        }
        let det = !self.det_value.is_zero();
        let classical = self.is_irreducible && self.is_aperiodic;
        det == classical && classical == self.quasi_positive_exponent.is_some()
    }
}

pub fn zeon_criterion(a: &StochasticMatrix) -> ErgodicityReport {
    let structure = ChainStructure::of(a);
    let is_irreducible = structure.is_irreducible();
    let is_aperiodic = structure.is_aperiodic();
    let has_positive_invariant = !structure.has_transients();
    let det_value = zeon_determinant(a);

    let criterion_verdict = match (has_positive_invariant, det_value.is_zero()) {
        (false, _) => Verdict::CriterionInapplicable,
        (true, false) => Verdict::Ergodic,
        (true, true) => Verdict::NotErgodic,
    };

    let witness = match criterion_verdict {
        Verdict::NotErgodic if !is_irreducible => witness_reducible(&structure).ok(),
        Verdict::NotErgodic => witness_periodic(&structure, 1).ok(),
        Verdict::CriterionInapplicable if det_value.is_zero() => nonnegative_fixed_vector(a),
        _ => None,
    };

    let closed: Vec<_> = structure.closed_classes().collect();
    let invariant_distribution = match closed.as_slice() {
        [only] => Some(class_distribution(a.matrix(), &only.states)),
        _ => None,
    };

    ErgodicityReport {
        is_irreducible,
        is_aperiodic,
        quasi_positive_exponent: is_quasi_positive(a),
        has_positive_invariant,
        det_value,
        criterion_verdict,
        witness,
        invariant_distribution,
        limit_matrix: ergodic_limit(a),
        structure,
    }
}

/// A basis vector of the fixed space of `Ψ₂(A)` with constant sign, scaled
/// to be nonnegative.
fn nonnegative_fixed_vector(a: &StochasticMatrix) -> Option<DegreeTwoVector> {
    if a.n() < 2 {
        return None;
    }
    let psi = zeon_power(a.matrix(), 2).expect("n >= 2");
    let shifted = &psi - &Matrix::identity(psi.rows());
    shifted
        .right_null_space()
        .expect("square")
        .into_iter()
        .map(Matrix::into_entries)
        .find_map(|v| {
            if v.iter().all(|x| !x.is_negative()) {
                Some(v)
            } else if v.iter().all(|x| !x.is_positive()) {
                Some(v.iter().map(|x| -x).collect())
            } else {
                None
            }
        })
        .map(|v| DegreeTwoVector::new(a.n(), v).expect("pair-space length"))
}
