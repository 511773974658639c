//! The generic completion procedure: S-vectors, normal forms, and the
//! critical-pair loop that returns a superset of the minimal elements.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::element::SignedElement;
use crate::bounds::Bounds;

/// Prefix-bound check on the lifted columns. Only the first `prefix.len()`
/// limits are consulted; the lifted coordinate itself is never truncated
/// inside a step.
pub(crate) fn prefix_admitted(bounds: &Bounds, prefix: &[BigInt]) -> bool {
    prefix.iter().enumerate().all(|(i, x)| bounds.admits(i, x))
}

/// `{f + g}` when the lifted coordinates have strictly opposite signs and
/// the prefix sum stays below `bounds`; `None` otherwise.
pub fn s_vector_hb(f: &SignedElement, g: &SignedElement, bounds: &Bounds) -> Option<SignedElement> {
    if !f.opposes(g) {
        return None;
    }
    debug_assert!(bounds.dim() >= f.prefix().len());
    let fits = f
        .prefix()
        .iter()
        .zip(g.prefix())
        .enumerate()
        .all(|(i, (a, b))| bounds.admits(i, &(a + b)));
    fits.then(|| f.sum(g))
}

/// Largest `α` with `α·g ⊑ s`, given `g ⊑ s`.
fn reduction_factor(s: &SignedElement, g: &SignedElement) -> BigInt {
    let ratios = s
        .prefix()
        .iter()
        .zip(g.prefix())
        .chain(std::iter::once((s.last(), g.last())))
        .filter(|(_, gi)| !gi.is_zero())
        .map(|(si, gi)| si.div_floor(gi));
    ratios.min().expect("g is nonzero")
}

/// Repeatedly subtracts the first `g ∈ G` (in order) with `g ⊑ s`, using
/// the largest multiple that keeps the remainder in the same orthant.
pub fn normal_form_hb(s: &SignedElement, basis: &[SignedElement]) -> SignedElement {
    let mut s = s.clone();
    while let Some(g) = basis.iter().find(|g| !g.is_zero() && g.divides(&s)) {
        let alpha = reduction_factor(&s, g);
        let next = s.sub_scaled(&alpha, g);
        debug_assert!(next.norm1() < s.norm1(), "normal form must shrink the 1-norm");
        s = next;
    }
    s
}

/// The completion loop with a FIFO queue of pending S-vectors. Returns `G`,
/// which contains every minimal element of `K⁺ ∪ K⁻` below the bounds.
pub fn complete_hb(input: &[SignedElement], bounds: &Bounds) -> Vec<SignedElement> {
    let mut basis: Vec<SignedElement> = Vec::with_capacity(input.len());
    for f in input {
        if !basis.contains(f) {
            basis.push(f.clone());
        }
    }
    let mut pending: VecDeque<SignedElement> = VecDeque::new();
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            pending.extend(s_vector_hb(f, g, bounds));
        }
    }
    while let Some(s) = pending.pop_front() {
        let f = normal_form_hb(&s, &basis);
        if f.is_zero() {
            continue;
        }
        for g in &basis {
            pending.extend(s_vector_hb(&f, g, bounds));
        }
        basis.push(f);
    }
    basis
}

/// Drops every element that is sign-divided by another distinct element.
pub fn minimize_hb(set: &[SignedElement]) -> Vec<SignedElement> {
    let mut sorted: Vec<SignedElement> = set.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted
        .iter()
        .filter(|z| !sorted.iter().any(|g| g != *z && g.divides(z)))
        .cloned()
        .collect()
}
