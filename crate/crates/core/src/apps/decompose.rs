use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::hilbert::{Engine, LiftState, Strategy};
use crate::lattice::{integer_kernel, triangularize};
use crate::vector::{IntMatrix, IntVector};

/// `u` written as a nonnegative combination of Hilbert basis elements of
/// `ker(A) ∩ ℝ₊ⁿ`. Terms are sorted by vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<(IntVector, BigInt)>,
}

impl Decomposition {
    /// `Σ multiplicity · vector`.
    pub fn sum(&self, dim: usize) -> IntVector {
        self.terms
            .iter()
            .fold(IntVector::zeros(dim), |acc, (v, k)| acc.add_scaled(k, v))
    }
}

/// Decomposes `u ∈ ker(A) ∩ ℤ₊ⁿ` over the Hilbert basis of the kernel,
/// truncated at `u`.
///
/// Whenever a stage element with every pivot lifted is already a full
/// vector `v <= u`, it is subtracted at once and the bounds shrink to
/// `u - v`, which prunes the remaining stages.
pub fn decompose(a: &IntMatrix, u: &IntVector) -> Result<Decomposition> {
    let n = a.num_cols();
    if u.dim() != n {
        return Err(Error::Argument(format!(
            "target has dimension {}, matrix has {n} columns",
            u.dim()
        )));
    }
    if !u.is_nonnegative() {
        return Err(Error::Argument("target has a negative entry".into()));
    }
    if !a.mul_vec(u).is_zero() {
        return Err(Error::Argument("target is not in the kernel".into()));
    }
    let mut terms: BTreeMap<IntVector, BigInt> = BTreeMap::new();
    if u.is_zero() {
        return Ok(Decomposition { terms: Vec::new() });
    }
    let basis = triangularize(&integer_kernel(a));
    let s = basis.rank();
    let mut state = LiftState::new(basis, &Bounds::from_vector(u)?)?;
    let mut rest = state.basis().to_working(u);

    loop {
        if state.j() >= s {
            take_early(&mut state, &mut rest, &mut terms);
        }
        if state.is_complete() || rest.is_zero() {
            break;
        }
        state.advance(Engine::Graded, Strategy::InputOrder, None)?;
    }

    let mut rest = state.basis().to_original(&rest);
    if !rest.is_zero() {
        let basis = state.finish();
        while !rest.is_zero() {
            let v = basis
                .iter()
                .find(|v| v.leq(&rest))
                .ok_or_else(|| Error::Degenerate("truncated basis does not cover the target".into()))?;
            rest = &rest - v;
            *terms.entry(v.clone()).or_default() += 1;
        }
    }
    Ok(Decomposition {
        terms: terms.into_iter().collect(),
    })
}

fn take_early(state: &mut LiftState, rest: &mut IntVector, terms: &mut BTreeMap<IntVector, BigInt>) {
    loop {
        let hit = state
            .current()
            .iter()
            .find(|v| v.is_nonnegative() && !v.is_zero() && v.leq(rest))
            .cloned();
        let Some(v) = hit else { return };
        *rest = &*rest - &v;
        let orig = state.basis().to_original(&v);
        *terms.entry(orig).or_default() += 1;
        let bounds = Bounds::from_vector(rest).expect("remainder stays nonnegative");
        state.tighten(bounds);
    }
}
