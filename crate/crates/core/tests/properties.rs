mod common;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zeon_core::degree2::{self, DegreeTwoVector};
use zeon_core::markov::{self, ChainStructure, StochasticMatrix, Verdict};
use zeon_core::rational::Rational;
use zeon_core::zeon::{self, MultiIndexBasis};
use zeon_core::Matrix;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn nonneg_rational() -> impl Strategy<Value = Rational> {
    (0i64..=6, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn square(n: usize, entry: impl Strategy<Value = Rational>) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(entry, n * n).prop_map(move |v| Matrix::from_vec(n, n, v).unwrap())
}

fn sized_square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| square(n, rational()))
}

fn matrix_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=5).prop_flat_map(|n| (square(n, rational()), square(n, rational())))
}

fn stochastic(n: usize) -> impl Strategy<Value = StochasticMatrix> {
    prop::collection::vec(prop_oneof![2 => Just(0i64), 3 => 1i64..=5], n * n).prop_map(move |mut w| {
        for i in 0..n {
            if w[i * n..(i + 1) * n].iter().all(|&x| x == 0) {
                w[i * n + i] = 1;
            }
        }
        let rows = (0..n)
            .map(|i| {
                let row = &w[i * n..(i + 1) * n];
                let total: i64 = row.iter().sum();
                row.iter().map(|&x| Rational::new(x.into(), total.into())).collect()
            })
            .collect();
        StochasticMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
    })
}

fn x_vector(n: usize, entry: impl Strategy<Value = Rational>) -> impl Strategy<Value = DegreeTwoVector> {
    prop::collection::vec(entry, n * (n - 1) / 2).prop_map(move |v| DegreeTwoVector::new(n, v).unwrap())
}

fn stochastic_with_x() -> impl Strategy<Value = (StochasticMatrix, DegreeTwoVector)> {
    (2usize..=5).prop_flat_map(|n| (stochastic(n), x_vector(n, rational())))
}

fn nonneg_pair() -> impl Strategy<Value = (Matrix, DegreeTwoVector)> {
    (2usize..=5).prop_flat_map(|n| (square(n, nonneg_rational()), x_vector(n, nonneg_rational())))
}

/// Zeros out all but at most one entry per column.
fn column_sparse(m: &Matrix, keep: &[usize]) -> Matrix {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        if keep[j] % (m.rows() + 1) == i {
            m[(i, j)].clone()
        } else {
            Rational::zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_matches_cofactor(m in sized_square()) {
        prop_assert_eq!(m.determinant().unwrap(), common::cofactor_det(&m));
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in matrix_pair()) {
        prop_assert_eq!((&a * &b).determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn left_null_vectors_annihilate(m in sized_square(), rank_drop in 0usize..3) {
        // Force a dependency so the null space is often nontrivial.
        let mut rows = m.to_rows();
        let n = rows.len();
        if n > 1 && rank_drop > 0 {
            rows[n - 1] = rows[0].clone();
        }
        let m = Matrix::from_rows(rows).unwrap();
        let basis = m.left_null_space().unwrap();
        for v in &basis {
            prop_assert!((v * &m).is_zero());
        }
        prop_assert_eq!(basis.len() + m.rank(), n);
        for v in m.right_null_space().unwrap() {
            prop_assert!((&m * &v).is_zero());
        }
    }

    #[test]
    fn power_exponents_add(m in (1usize..=4).prop_flat_map(|n| square(n, rational())), a in 0u64..4, b in 0u64..4) {
        prop_assert_eq!(m.power(a + b).unwrap(), &m.power(a).unwrap() * &m.power(b).unwrap());
    }

    #[test]
    fn pattern_of_power_is_boolean_power(m in (1usize..=5).prop_flat_map(|n| square(n, nonneg_rational())), e in 0u64..6) {
        prop_assert_eq!(m.power(e).unwrap().pattern(), m.pattern().power(e));
    }

    #[test]
    fn permanent_ignores_transpositions(m in (2usize..=5).prop_flat_map(|n| square(n, rational())), i in 0usize..5, j in 0usize..5) {
        let n = m.rows();
        let (i, j) = (i % n, j % n);
        let p = zeon::permanent(&m).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.swap(i, j);
        let identity: Vec<usize> = (0..n).collect();
        prop_assert_eq!(zeon::permanent(&m.submatrix(&order, &identity)).unwrap(), p.clone());
        prop_assert_eq!(zeon::permanent(&m.submatrix(&identity, &order)).unwrap(), p.clone());
        prop_assert_eq!(zeon::permanent(&m.transpose()).unwrap(), p);
    }

    #[test]
    fn sparse_factors_are_homomorphic(
        (w1, w2) in (2usize..=4).prop_flat_map(|n| (square(n, rational()), square(n, rational()))),
        keep in prop::collection::vec(0usize..5, 4),
        k in 1usize..=4,
    ) {
        let n = w1.rows();
        let k = 1 + (k - 1) % n;
        let left = column_sparse(&w1, &keep);
        prop_assert!(zeon::is_zeon_homomorphic_pair(&left, &w2, k).unwrap());
        let right = column_sparse(&w2.transpose(), &keep).transpose();
        prop_assert!(zeon::is_zeon_homomorphic_pair(&w1, &right, k).unwrap());
    }

    #[test]
    fn embedding_round_trips_and_is_linear(
        (x, y) in (2usize..=6).prop_flat_map(|n| (x_vector(n, rational()), x_vector(n, rational()))),
        c in rational(),
    ) {
        prop_assert_eq!(degree2::unmat(&degree2::mat_embed(&x)), x.clone());
        let sum = DegreeTwoVector::new(x.n(), x.coords().iter().zip(y.coords()).map(|(a, b)| a * &c + b).collect()).unwrap();
        let lhs = degree2::mat_embed(&sum).into_matrix();
        let rhs = &degree2::mat_embed(&x).matrix().scale(&c) + degree2::mat_embed(&y).matrix();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basic_relation_corrections_are_nonnegative((a, x) in nonneg_pair()) {
        let dplus = degree2::diag_correction_plus(&a, &x).unwrap();
        let dminus = degree2::diag_correction_minus(&a, &x).unwrap();
        prop_assert!(dplus.is_nonnegative() && dminus.is_nonnegative());
        prop_assert_eq!(dplus.trace(), degree2::congruence_left(&x, &a).unwrap().trace());
        prop_assert_eq!(dminus.trace(), degree2::congruence_right(&a, &x).unwrap().trace());
        if dplus.trace().is_zero() {
            prop_assert!(dplus.is_zero());
        }
        if dminus.trace().is_zero() {
            prop_assert!(dminus.is_zero());
        }
    }

    #[test]
    fn integration_by_parts_holds((a, x) in stochastic_with_x()) {
        let (lhs, rhs) = degree2::integration_by_parts(&x, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(
            degree2::trace_identity_left(&x, a.matrix()).unwrap(),
            degree2::trace_identity_stochastic(&x, &a).unwrap()
        );
    }

    #[test]
    fn mass_contracts_for_nonnegative_x(
        (a, x) in (2usize..=5).prop_flat_map(|n| (stochastic(n), x_vector(n, nonneg_rational())))
    ) {
        let moved = degree2::left_action(&x, a.matrix()).unwrap();
        prop_assert!(degree2::sum_against_u(&moved) <= degree2::sum_against_u(&x));
        let (lhs, _) = degree2::integration_by_parts(&x, &a).unwrap();
        prop_assert!(!lhs.is_negative());
    }

    #[test]
    fn general_identities_hold_without_stochasticity(
        (a, x) in (2usize..=5).prop_flat_map(|n| (square(n, rational()), x_vector(n, rational())))
    ) {
        prop_assert!(degree2::general_bp_identities(&x, &a).unwrap().holds());
        let left = degree2::left_action(&x, &a).unwrap();
        prop_assert_eq!(degree2::trace_identity_left(&x, &a).unwrap(), degree2::sum_against_u(&left));
        let right = degree2::right_action(&a, &x).unwrap();
        prop_assert_eq!(degree2::trace_identity_right(&x, &a).unwrap(), degree2::sum_against_u(&right));
    }

    #[test]
    fn stochastic_shortcut_collapses_row_identity((a, x) in stochastic_with_x()) {
        let bp = degree2::general_bp_identities(&x, a.matrix()).unwrap();
        let (_, rhs) = degree2::integration_by_parts(&x, &a).unwrap();
        prop_assert_eq!(bp.row_rhs, rhs);
    }

    #[test]
    fn criterion_agrees_with_classical_tests(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = markov::random_recurrent_chain(n, &mut rng);
        let report = markov::zeon_criterion(&a);
        prop_assert!(report.is_consistent());
        prop_assert!(report.criterion_verdict != Verdict::CriterionInapplicable);
        if let Some(w) = &report.witness {
            prop_assert!(w.is_nonnegative() && !w.is_zero());
            prop_assert_eq!(&degree2::right_action(a.matrix(), w).unwrap(), w);
        }
    }
}

#[test]
fn rank_unrank_round_trip() {
    for n in 1..=10 {
        for k in 1..=n {
            let b = MultiIndexBasis::new(n, k).unwrap();
            for r in 0..b.len() {
                assert_eq!(b.rank(b.unrank(r).unwrap()).unwrap(), r);
            }
            assert!(b.subsets().windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn lexicographic_order_is_shared_by_pairs_and_zeon_basis() {
    for n in 2..=8 {
        let basis = MultiIndexBasis::new(n, 2).unwrap();
        let pairs: Vec<Vec<usize>> = degree2::pairs(n).map(|(i, j)| vec![i, j]).collect();
        assert_eq!(basis.subsets(), pairs.as_slice());
    }
}

#[test]
fn congruence_fixed_points_are_zeon_fixed_points() {
    // X̂ = J − I is fixed by every permutation congruence.
    let n = 5;
    let x = degree2::ones(n);
    for f in zeon::FunctionMap::all(n)
        .filter(zeon::FunctionMap::is_permutation)
        .take(40)
    {
        let p = f.matrix();
        assert!(degree2::is_left_congruence_fixed(&x, &p).unwrap());
        assert!(degree2::is_right_congruence_fixed(&p, &x).unwrap());
        assert_eq!(degree2::left_action(&x, &p).unwrap(), x);
        assert_eq!(degree2::right_action(&p, &x).unwrap(), x);
    }
}

#[test]
fn nonnegative_fixed_vectors_satisfy_congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    for _ in 0..200 {
        let n = 3 + checked % 3;
        let a = markov::random_recurrent_chain(n, &mut rng);
        let m = a.matrix();
        let psi = zeon::zeon_power(m, 2).unwrap();
        let shifted = &psi - &Matrix::identity(psi.rows());
        for v in shifted.left_null_space().unwrap() {
            if let Some(x) = sign_normalized(n, v.into_entries()) {
                assert!(degree2::is_left_congruence_fixed(&x, m).unwrap());
                checked += 1;
            }
        }
        for v in shifted.right_null_space().unwrap() {
            if let Some(x) = sign_normalized(n, v.into_entries()) {
                assert!(degree2::is_right_congruence_fixed(m, &x).unwrap());
                checked += 1;
            }
        }
        let structure = ChainStructure::of(&a);
        if structure.is_irreducible() && structure.is_aperiodic() {
            // Only the zero vector is fixed.
            assert!(shifted.right_null_space().unwrap().is_empty());
            assert!(shifted.left_null_space().unwrap().is_empty());
        }
    }
    assert!(checked > 20, "too few nonnegative fixed vectors exercised: {checked}");
}

fn sign_normalized(n: usize, v: Vec<Rational>) -> Option<DegreeTwoVector> {
    let v = if v.iter().all(|x| !x.is_negative()) {
        v
    } else if v.iter().all(|x| !x.is_positive()) {
        v.iter().map(|x| -x).collect()
    } else {
        return None;
    };
    Some(DegreeTwoVector::new(n, v).unwrap())
}

#[test]
fn witnesses_have_vanishing_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    let mut periodic = 0;
    let mut reducible = 0;
    for _ in 0..300 {
        let a = markov::random_recurrent_chain(5, &mut rng);
        let s = ChainStructure::of(&a);
        let witness = if !s.is_irreducible() {
            reducible += 1;
            markov::witness_reducible(&s).unwrap()
        } else if let Some(p) = s.period().filter(|&p| p > 1) {
            periodic += 1;
            let w = markov::witness_periodic(&s, 1 + periodic % (p / 2)).unwrap();
            assert!(degree2::diag_correction_minus(a.matrix(), &w).unwrap().is_zero());
            w
        } else {
            continue;
        };
        assert!(degree2::diag_correction_minus(a.matrix(), &witness).unwrap().is_zero());
        assert_eq!(degree2::right_action(a.matrix(), &witness).unwrap(), witness);
        assert!(markov::zeon_determinant(&a).is_zero());
    }
    assert!(periodic > 0 && reducible > 0);
}

#[test]
fn ergodic_limit_is_a_rank_one_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(79);
    let mut seen = 0;
    for _ in 0..200 {
        let a = markov::random_recurrent_chain(4, &mut rng);
        let report = markov::zeon_criterion(&a);
        if report.criterion_verdict != Verdict::Ergodic {
            continue;
        }
        seen += 1;
        let omega = report.limit_matrix.unwrap();
        let pi = report.invariant_distribution.unwrap();
        let m = a.matrix();
        assert_eq!(&omega * &omega, omega);
        assert_eq!(m * &omega, omega);
        assert_eq!(&omega * m, omega);
        assert_eq!(omega.rank(), 1);
        let n = Rational::from_integer(4.into());
        let pi_row = Matrix::row_vector(pi.clone());
        let sq: Rational = pi.iter().map(|p| p * p).sum();
        let oto = &omega.transpose() * &omega;
        assert_eq!(oto, (&pi_row.transpose() * &pi_row).scale(&n));
        let oot = &omega * &omega.transpose();
        assert_eq!(oot, Matrix::ones(4, 4).scale(&sq));
        assert!(oto.is_positive() && oot.is_positive());
        assert_eq!(pi.iter().sum::<Rational>(), Rational::one());
    }
    assert!(seen > 10);
}
