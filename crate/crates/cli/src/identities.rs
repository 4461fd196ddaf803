//! Identity checks run by `verify`. Each check compares two sides computed
//! by separate routes: the component formulas in `degree2` on one side and
//! plain matrix algebra through `Ψ₂(A)` on the other.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rand::Rng;
use zeon_core::degree2::{self, DegreeTwoVector};
use zeon_core::markov::StochasticMatrix;
use zeon_core::rational::{ratio, Rational};
use zeon_core::zeon::zeon_power;
use zeon_core::{Matrix, Result};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    BasicRelations,
    Eq4,
    TraceIdentities,
    IntegrationByParts,
    Eq6,
    Eq7,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::BasicRelations,
        Identity::Eq4,
        Identity::TraceIdentities,
        Identity::IntegrationByParts,
        Identity::Eq6,
        Identity::Eq7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::BasicRelations => "basic-relations",
            Identity::Eq4 => "eq4",
            Identity::TraceIdentities => "trace-identities",
            Identity::IntegrationByParts => "integration-by-parts",
            Identity::Eq6 => "eq6",
            Identity::Eq7 => "eq7",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.map(Identity::name).join(", ")
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| CliError::UnknownIdentity {
                name: s.to_string(),
                valid: Self::valid_names(),
            })
    }
}

/// One named equality and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

fn check(name: &'static str, holds: bool) -> Check {
    Check { name, holds }
}

/// Reference values computed straight from the `Ψ₂(A)` matrix.
struct PsiRoute {
    psi: Matrix,
    u: Matrix,
}

impl PsiRoute {
    fn new(a: &Matrix) -> Result<Self> {
        let psi = zeon_power(a, 2)?;
        let u = Matrix::ones(psi.rows(), 1);
        Ok(Self { psi, u })
    }

    /// `X Ψ₂(A) u†`
    fn left_total(&self, x: &DegreeTwoVector) -> Rational {
        (&(&x.as_row() * &self.psi) * &self.u)[(0, 0)].clone()
    }

    /// `u Ψ₂(A) X†`
    fn right_total(&self, x: &DegreeTwoVector) -> Rational {
        (&(&self.u.transpose() * &self.psi) * &x.as_column())[(0, 0)].clone()
    }

    /// `X u†`
    fn total(&self, x: &DegreeTwoVector) -> Rational {
        (&x.as_row() * &self.u)[(0, 0)].clone()
    }
}

fn half_trace(m: &Matrix) -> Rational {
    m.trace() * ratio(1, 2)
}

/// Runs every check of `identity` for one `x` against `a`.
///
/// `integration-by-parts` needs a stochastic `a`; callers validate first.
pub fn run_checks(identity: Identity, a: &Matrix, x: &DegreeTwoVector) -> Result<Vec<Check>> {
    let route = PsiRoute::new(a)?;
    let n = a.rows();
    let xh = degree2::mat_embed(x);
    Ok(match identity {
        Identity::BasicRelations => {
            let left = degree2::left_action(x, a)?;
            let right = degree2::right_action(a, x)?;
            let cong_l = degree2::congruence_left(x, a)?;
            let cong_r = degree2::congruence_right(a, x)?;
            let d_plus = degree2::diag_correction_plus(a, x)?;
            let d_minus = degree2::diag_correction_minus(a, x)?;
            vec![
                check("left action = X Psi2(A)", left.as_row() == &x.as_row() * &route.psi),
                check(
                    "Mat(X Psi2(A)) = A*XA - D+",
                    degree2::mat_embed(&left).matrix() == &(&cong_l - &d_plus),
                ),
                check("tr D+ = tr A*XA", d_plus.trace() == cong_l.trace()),
                check(
                    "right action = Psi2(A) X",
                    right.as_column() == &route.psi * &x.as_column(),
                ),
                check(
                    "Mat(Psi2(A) X) = AXA* - D-",
                    degree2::mat_embed(&right).matrix() == &(&cong_r - &d_minus),
                ),
                check("tr D- = tr AXA*", d_minus.trace() == cong_r.trace()),
            ]
        }
        Identity::Eq4 => {
            let half_tr_xj = half_trace(&(xh.matrix() * &Matrix::ones(n, n)));
            let u_x = (&route.u.transpose() * &x.as_column())[(0, 0)].clone();
            vec![
                check("X u = 1/2 tr(XJ)", route.total(x) == half_tr_xj),
                check("u X = 1/2 tr(XJ)", u_x == half_tr_xj),
                check("sum_against_u = X u", degree2::sum_against_u(x) == route.total(x)),
            ]
        }
        Identity::TraceIdentities => {
            let mut checks = vec![
                check(
                    "X Psi2(A) u = 1/2 tr(X A(J-I)A*)",
                    degree2::trace_identity_left(x, a)? == route.left_total(x),
                ),
                check(
                    "u Psi2(A) X = 1/2 tr(X A*(J-I)A)",
                    degree2::trace_identity_right(x, a)? == route.right_total(x),
                ),
            ];
            if let Ok(s) = StochasticMatrix::new(a.clone()) {
                checks.push(check(
                    "X Psi2(A) u = 1/2 tr(X(J-AA*))",
                    degree2::trace_identity_stochastic(x, &s)? == route.left_total(x),
                ));
            }
            checks
        }
        Identity::IntegrationByParts => {
            let s = StochasticMatrix::new(a.clone())?;
            let (lhs, rhs) = degree2::integration_by_parts(x, &s)?;
            let direct = route.total(x) - route.left_total(x);
            let congruence = half_trace(&(&(&a.transpose() * xh.matrix()) * a));
            vec![
                check("integration by parts sides agree", lhs == rhs),
                check("X(I-Psi2(A))u = 1/2 tr A*XA", direct == congruence),
            ]
        }
        Identity::Eq6 => {
            let bp = degree2::general_bp_identities(x, a)?;
            let direct = route.total(x) - route.left_total(x);
            vec![
                check("X(I-Psi2(A))u = 1/2 tr(X(J - AJA* + AA*))", bp.row_lhs == bp.row_rhs),
                check("X(I-Psi2(A))u through Psi2", direct == bp.row_rhs),
            ]
        }
        Identity::Eq7 => {
            let bp = degree2::general_bp_identities(x, a)?;
            let direct = route.total(x) - route.right_total(x);
            vec![
                check(
                    "u(I-Psi2(A))X = 1/2 tr(X(J - A*JA + A*A))",
                    bp.column_lhs == bp.column_rhs,
                ),
                check("u(I-Psi2(A))X through Psi2", direct == bp.column_rhs),
            ]
        }
    })
}

/// Random rational in `[-6, 6]` with denominator at most 6.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.random_range(-6..=6);
    let den: i64 = rng.random_range(1..=6);
    if rng.random_bool(0.3) {
        Rational::from_integer(num.into())
    } else {
        ratio(num, den)
    }
}

pub fn random_vector(n: usize, rng: &mut impl Rng) -> DegreeTwoVector {
    DegreeTwoVector::from_fn(n, |_, _| random_rational(rng))
}

/// Random square matrix with entries from [`random_rational`].
pub fn random_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |_, _| random_rational(rng))
}

/// Random stochastic matrix with a random zero pattern.
pub fn random_stochastic(n: usize, rng: &mut impl Rng) -> StochasticMatrix {
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|_| {
            let mut weights: Vec<i64> = (0..n)
                .map(|_| {
                    if rng.random_bool(0.3) {
                        0
                    } else {
                        rng.random_range(1..=5)
                    }
                })
                .collect();
            if weights.iter().all(|&w| w == 0) {
                weights[rng.random_range(0..n)] = 1;
            }
            let total: i64 = weights.iter().sum();
            weights.into_iter().map(|w| ratio(w, total)).collect()
        })
        .collect();
    let m = Matrix::from_rows(rows).expect("square");
    debug_assert!(m.row_iter().all(|r| r.iter().sum::<Rational>().is_one()));
    StochasticMatrix::new(m).expect("rows normalized")
}
