use num_traits::{One, Zero};

use super::structure::ChainStructure;
use crate::degree2::DegreeTwoVector;
use crate::error::{Error, Result};
use crate::rational::Rational;

fn indicator(flag: bool) -> Rational {
    if flag {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Cross-class indicator: `x_ij = 1` when `i` and `j` lie in different
/// communicating classes. Requires at least two classes, all closed.
pub fn witness_reducible(structure: &ChainStructure) -> Result<DegreeTwoVector> {
    let classes = structure.classes().len();
    if classes < 2 {
        return Err(Error::TooFewClasses { classes });
    }
    if structure.has_transients() {
        return Err(Error::TransientStates {
            states: structure.transient_states().iter().map(|s| s + 1).collect(),
        });
    }
    Ok(DegreeTwoVector::from_fn(structure.n(), |i, j| {
        indicator(structure.class_index(i) != structure.class_index(j))
    }))
}

/// Cyclic-distance indicator for an irreducible chain of period `p ≥ 2`:
/// `x_ij = 1` when the cyclic classes of `i` and `j` are `delta` apart
/// modulo `p` (shortest way round), for `1 ≤ delta ≤ p/2`.
pub fn witness_periodic(structure: &ChainStructure, delta: usize) -> Result<DegreeTwoVector> {
    if !structure.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let class = &structure.classes()[0];
    let p = class.period.unwrap_or(1);
    if p < 2 {
        return Err(Error::Aperiodic);
    }
    let max = p / 2;
    if delta == 0 || delta > max {
        return Err(Error::DeltaOutOfRange { delta, max, period: p });
    }
    let mut position = vec![0usize; structure.n()];
    for (k, states) in class.cyclic_classes.iter().enumerate() {
        for &s in states {
            position[s] = k;
        }
    }
    Ok(DegreeTwoVector::from_fn(structure.n(), |i, j| {
        let d = position[i].abs_diff(position[j]);
        indicator(d.min(p - d) == delta)
    }))
}
