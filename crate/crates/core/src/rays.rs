//! Extreme rays of `span(p₁…pₛ) ∩ ℝ₊ⁿ` by project-and-lift.
//!
//! Same lift skeleton as the Hilbert engine, over the reals: S-vectors
//! cancel the lifted coordinate, and normal forms subtract along support
//! containment. All arithmetic stays integral by working with primitive
//! representatives of each ray.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use log::info;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{triangularize, TriangularBasis};
use crate::vector::{IntMatrix, IntVector};

/// Primitive representative of a ray in `K̄⁺ ∪ K̄⁻`: nonnegative prefix,
/// signed lifted coordinate, entries with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayElement {
    prefix: Vec<BigInt>,
    last: BigInt,
    support: Vec<usize>,
}

impl RayElement {
    pub fn new(prefix: IntVector, last: BigInt) -> Result<Self> {
        if !prefix.is_nonnegative() {
            return Err(Error::Argument(format!("prefix {prefix} has a negative entry")));
        }
        let mut coords = prefix.into_entries();
        coords.push(last);
        let v = canonicalize_ray(&IntVector::new(coords))?;
        Ok(Self::from_canonical(v.into_entries()))
    }

    pub fn from_i64s(prefix: &[i64], last: i64) -> Self {
        Self::new(IntVector::from_i64s(prefix), BigInt::from(last)).expect("valid ray")
    }

    fn from_canonical(mut coords: Vec<BigInt>) -> Self {
        let support = (0..coords.len()).filter(|&i| !coords[i].is_zero()).collect();
        let last = coords.pop().expect("at least one coordinate");
        RayElement {
            prefix: coords,
            last,
            support,
        }
    }

    /// Canonicalizes, or `None` for the zero vector.
    fn from_coords(coords: Vec<BigInt>) -> Option<Self> {
        let v = IntVector::new(coords);
        if v.is_zero() {
            return None;
        }
        let v = canonicalize_ray(&v).expect("nonzero");
        Some(Self::from_canonical(v.into_entries()))
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn last(&self) -> &BigInt {
        &self.last
    }

    /// Nonzero coordinates among all `j + 1`.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Number of nonzero prefix entries.
    pub fn prefix_support_len(&self) -> usize {
        let j = self.prefix.len();
        self.support.iter().filter(|&&i| i < j).count()
    }

    pub fn coords(&self) -> IntVector {
        let mut v = self.prefix.clone();
        v.push(self.last.clone());
        IntVector::new(v)
    }

    fn get(&self, i: usize) -> &BigInt {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.last
        }
    }

    /// `supp(self) ⊆ supp(other)` with the lifted coordinates not of
    /// opposite sign.
    pub fn support_within(&self, other: &RayElement) -> bool {
        if self.last.signum() * other.last.signum() < BigInt::zero() {
            return false;
        }
        is_subset(&self.support, &other.support)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// `v / gcd(v)` with the overall sign kept.
pub fn canonicalize_ray(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::Argument("the zero vector has no ray".into()));
    }
    Ok(IntVector::new(v.iter().map(|x| x / &g).collect()))
}

/// Positive combination of `f` and `g` that cancels the lifted coordinate,
/// `|g'|·f + |f'|·g`, when those coordinates have strictly opposite signs.
pub fn s_vector_ray(f: &RayElement, g: &RayElement) -> Option<RayElement> {
    let opposite = (f.last.is_positive() && g.last.is_negative()) || (f.last.is_negative() && g.last.is_positive());
    if !opposite {
        return None;
    }
    let (a, b) = (g.last.abs(), f.last.abs());
    let coords: Vec<BigInt> = f
        .prefix
        .iter()
        .zip(&g.prefix)
        .map(|(x, y)| &a * x + &b * y)
        .chain(std::iter::once(&a * &f.last + &b * &g.last))
        .collect();
    debug_assert!(coords.last().unwrap().is_zero());
    RayElement::from_coords(coords)
}

/// Subtracts `α·g` for the first `g` whose support lies in `supp(s)`,
/// with `α` the largest multiple keeping every coordinate in its orthant,
/// until no such `g` remains. `None` when `s` reduces to zero.
pub fn normal_form_ray(s: &RayElement, basis: &[RayElement]) -> Option<RayElement> {
    let mut s = s.clone();
    while let Some(g) = basis.iter().find(|g| g.support_within(&s)) {
        // α = |s_k| / |g_k| minimised over supp(g)
        let k = *g
            .support
            .iter()
            .min_by(|&&a, &&b| {
                let lhs = s.get(a).abs() * g.get(b).abs();
                let rhs = s.get(b).abs() * g.get(a).abs();
                lhs.cmp(&rhs)
            })
            .expect("rays are nonzero");
        let (num, den) = (s.get(k).abs(), g.get(k).abs());
        let coords: Vec<BigInt> = (0..=s.prefix.len())
            .map(|i| &den * s.get(i) - &num * g.get(i))
            .collect();
        let before = s.support.len();
        s = RayElement::from_coords(coords)?;
        debug_assert!(s.support.len() < before, "normal form must shrink the support");
    }
    Some(s)
}

/// Completion with pending S-vectors taken by increasing prefix support.
pub fn complete_ray(input: &[RayElement]) -> Vec<RayElement> {
    let mut basis: Vec<RayElement> = Vec::new();
    for f in input {
        if !basis.contains(f) {
            basis.push(f.clone());
        }
    }
    let mut seq = 0usize;
    let mut pending: BinaryHeap<Reverse<(usize, usize, RayElement)>> = BinaryHeap::new();
    let mut push = |pending: &mut BinaryHeap<_>, s: RayElement| {
        pending.push(Reverse((s.prefix_support_len(), seq, s)));
        seq += 1;
    };
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            if let Some(s) = s_vector_ray(f, g) {
                push(&mut pending, s);
            }
        }
    }
    while let Some(Reverse((_, _, s))) = pending.pop() {
        let Some(f) = normal_form_ray(&s, &basis) else {
            continue;
        };
        for g in &basis {
            if let Some(s) = s_vector_ray(&f, g) {
                push(&mut pending, s);
            }
        }
        basis.push(f);
    }
    basis
}

/// Keeps only support-minimal elements (sign-consistently), deduplicated.
pub fn minimize_rays(set: &[RayElement]) -> Vec<RayElement> {
    let mut sorted = set.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted
        .iter()
        .filter(|x| {
            !sorted
                .iter()
                .any(|y| y.support.len() < x.support.len() && y.support_within(x))
        })
        .cloned()
        .collect()
}

/// Rational lift of a prefix to one more working column, through the
/// triangular generators.
struct LiftSolver<'a> {
    basis: &'a TriangularBasis,
}

impl LiftSolver<'_> {
    /// Value at working column `col` of a span element whose first `j`
    /// working coordinates are `x`, taking zero coefficients for generators
    /// not yet pinned down by `x`.
    fn lift(&self, x: &[BigInt], col: usize) -> BigRational {
        let pinned = x.len().min(self.basis.rank());
        let mut lambda: Vec<BigRational> = Vec::with_capacity(pinned);
        for (i, xi) in x.iter().enumerate().take(pinned) {
            let mut acc = BigRational::from_integer(xi.clone());
            for (k, l) in lambda.iter().enumerate() {
                acc -= l * BigRational::from_integer(self.basis.row(k)[i].clone());
            }
            lambda.push(acc / BigRational::from_integer(self.basis.pivot(i).clone()));
        }
        lambda
            .iter()
            .enumerate()
            .map(|(k, l)| l * BigRational::from_integer(self.basis.row(k)[col].clone()))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

/// Lifts each element of `R_j⁺` (given on the first `j` working columns) to
/// column `j`; while `j < s` the pair `±π(p_{j+1})` is added.
pub fn build_input_ray(basis: &TriangularBasis, j: usize, current: &[IntVector]) -> Vec<RayElement> {
    let solver = LiftSolver { basis };
    let mut out = Vec::with_capacity(current.len() + 2);
    for x in current {
        debug_assert_eq!(x.dim(), j);
        let h = solver.lift(x.entries(), j);
        let den = h.denom().clone();
        let mut coords: Vec<BigInt> = x.iter().map(|e| e * &den).collect();
        coords.push(h.numer().clone());
        out.extend(RayElement::from_coords(coords));
    }
    if j < basis.rank() {
        for sign in [BigInt::one(), -BigInt::one()] {
            let mut coords = vec![BigInt::zero(); j];
            coords.push(sign);
            out.extend(RayElement::from_coords(coords));
        }
    }
    out
}

/// Extreme rays of the cone spanned (over ℝ) by the rows of `generators`,
/// intersected with the nonnegative orthant. Primitive, sorted.
pub fn extreme_rays(generators: &IntMatrix) -> Result<Vec<IntVector>> {
    let n = generators.num_cols();
    if n == 0 {
        return Err(Error::Argument("generators have dimension zero".into()));
    }
    let basis = triangularize(generators);
    if basis.rank() == 0 {
        return Ok(Vec::new());
    }
    let mut current = vec![IntVector::from_i64s(&[1])];
    for j in 1..n {
        let input = build_input_ray(&basis, j, &current);
        let step = minimize_rays(&complete_ray(&input));
        current = step
            .iter()
            .filter(|r| !r.last.is_negative())
            .map(RayElement::coords)
            .collect();
        info!("rays: lifted {}/{n}, |R+| = {}", j + 1, current.len());
    }
    let mut out: Vec<IntVector> = current
        .iter()
        .map(|v| canonicalize_ray(&basis.to_original(v)))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::integer_kernel;

    fn r(prefix: &[i64], last: i64) -> RayElement {
        RayElement::from_i64s(prefix, last)
    }

    fn vs(rows: &[&[i64]]) -> Vec<IntVector> {
        rows.iter().map(|x| IntVector::from_i64s(x)).collect()
    }

    #[test]
    fn canonicalize_examples() {
        let c = |x: &[i64]| canonicalize_ray(&IntVector::from_i64s(x)).unwrap();
        assert_eq!(c(&[2, 4, 0]), IntVector::from_i64s(&[1, 2, 0]));
        assert_eq!(c(&[3]), IntVector::from_i64s(&[1]));
        assert_eq!(c(&[0, -6, 3]), IntVector::from_i64s(&[0, -2, 1]));
        assert!(canonicalize_ray(&IntVector::zeros(2)).is_err());
    }

    #[test]
    fn s_vector_examples() {
        assert_eq!(s_vector_ray(&r(&[1, 0], 2), &r(&[0, 1], -1)), Some(r(&[1, 2], 0)));
        assert_eq!(s_vector_ray(&r(&[1, 0], 2), &r(&[0, 1], 1)), None);
        assert_eq!(s_vector_ray(&r(&[2, 0], 1), &r(&[0, 2], -1)), Some(r(&[1, 1], 0)));
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form_ray(&r(&[2, 2], 0), &[r(&[1, 1], 0)]), None);
        assert_eq!(normal_form_ray(&r(&[3, 1], 0), &[r(&[1, 1], 0)]), Some(r(&[1, 0], 0)));
        let s = r(&[1, 0], 0);
        assert_eq!(normal_form_ray(&s, &[r(&[1, 1], 0), r(&[1, 0], 1)]), Some(s));
    }

    #[test]
    fn opposite_last_sign_does_not_reduce() {
        assert!(!r(&[1], -1).support_within(&r(&[2], 1)));
        assert!(r(&[1], 0).support_within(&r(&[2], 1)));
    }

    #[test]
    fn completion_examples() {
        let f = vec![r(&[1, 0], 1), r(&[0, 1], -1)];
        let g = complete_ray(&f);
        assert_eq!(g, vec![r(&[1, 0], 1), r(&[0, 1], -1), r(&[1, 1], 0)]);
        let same = vec![r(&[1, 0], 1), r(&[0, 1], 2)];
        assert_eq!(complete_ray(&same), same);
        assert!(complete_ray(&[]).is_empty());
    }

    #[test]
    fn initial_and_lifted_inputs() {
        let k = integer_kernel(&IntMatrix::from_i64_rows(3, &[&[1, 1, -1]]).unwrap());
        let basis = triangularize(&k);
        // R_1+ = {(p11)} canonicalizes to (1); j = 1 < s = 2 adds the pivot pair
        let f = build_input_ray(&basis, 1, &[IntVector::from_i64s(&[1])]);
        assert_eq!(f, vec![r(&[1], 0), r(&[0], 1), r(&[0], -1)]);
        let f = build_input_ray(&basis, 2, &vs(&[&[1, 0], &[0, 1]]));
        assert_eq!(f, vec![r(&[1, 0], 1), r(&[0, 1], 1)]);
    }

    #[test]
    fn named_cones() {
        let k = |row: &[i64]| integer_kernel(&IntMatrix::from_i64_rows(row.len(), &[row]).unwrap());
        assert_eq!(extreme_rays(&k(&[1, 1, -1])).unwrap(), vs(&[&[0, 1, 1], &[1, 0, 1]]));
        assert_eq!(
            extreme_rays(&k(&[1, 1, -1, -1])).unwrap(),
            vs(&[&[0, 1, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 0, 1, 0]])
        );
        assert_eq!(
            extreme_rays(&IntMatrix::identity(3)).unwrap(),
            vs(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
        );
        assert!(extreme_rays(&IntMatrix::empty(3)).unwrap().is_empty());
    }
}
