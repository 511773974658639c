use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::sign_divides_parts;
use crate::vector::IntVector;

/// A lift-stage vector `(v, v')`: a nonnegative prefix on the lifted
/// columns and a signed entry in the column being lifted.
///
/// Each element also carries one full lattice vector (in working column
/// order) whose projection it is, so the next coordinate can be read off
/// instead of re-solved. Equality, ordering and hashing look only at
/// `(prefix, last)`.
#[derive(Clone, Debug)]
pub struct SignedElement {
    prefix: Vec<BigInt>,
    last: BigInt,
    level: BigInt,
    lift: IntVector,
}

impl SignedElement {
    /// Standalone element whose lift is just `(prefix, last)`.
    pub fn new(prefix: IntVector, last: BigInt) -> Result<Self> {
        if !prefix.is_nonnegative() {
            return Err(Error::Argument(format!("prefix {prefix} has a negative entry")));
        }
        let mut full = prefix.entries().to_vec();
        full.push(last.clone());
        let level = prefix.iter().sum();
        Ok(SignedElement {
            prefix: prefix.into_entries(),
            last,
            level,
            lift: IntVector::new(full),
        })
    }

    pub fn from_i64s(prefix: &[i64], last: i64) -> Self {
        Self::new(IntVector::from_i64s(prefix), BigInt::from(last)).expect("prefix must be nonnegative")
    }

    /// Reads `(v, v')` off a full working-order vector.
    pub(crate) fn from_lift(lift: IntVector, lifted: &[usize], next: usize) -> Self {
        let prefix: Vec<BigInt> = lifted.iter().map(|&c| lift[c].clone()).collect();
        debug_assert!(prefix.iter().all(|x| !x.is_negative()));
        let level = prefix.iter().sum();
        SignedElement {
            last: lift[next].clone(),
            prefix,
            level,
            lift,
        }
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn last(&self) -> &BigInt {
        &self.last
    }

    pub fn level(&self) -> &BigInt {
        &self.level
    }

    pub fn lift(&self) -> &IntVector {
        &self.lift
    }

    pub(crate) fn into_lift(self) -> IntVector {
        self.lift
    }

    pub fn is_zero(&self) -> bool {
        self.last.is_zero() && self.prefix.iter().all(Zero::is_zero)
    }

    /// `(prefix, last)` as one vector of dimension `j + 1`.
    pub fn coords(&self) -> IntVector {
        let mut v = self.prefix.clone();
        v.push(self.last.clone());
        IntVector::new(v)
    }

    /// `‖prefix‖₁ + |last|`
    pub fn norm1(&self) -> BigInt {
        &self.level + self.last.abs()
    }

    /// `self ⊑ other`
    pub fn divides(&self, other: &SignedElement) -> bool {
        sign_divides_parts(&self.prefix, &self.last, &other.prefix, &other.last)
    }

    /// Strictly opposite signs in the lifted coordinate.
    pub fn opposes(&self, other: &SignedElement) -> bool {
        (self.last.is_positive() && other.last.is_negative()) || (self.last.is_negative() && other.last.is_positive())
    }

    pub fn sum(&self, other: &SignedElement) -> SignedElement {
        SignedElement {
            prefix: self.prefix.iter().zip(&other.prefix).map(|(a, b)| a + b).collect(),
            last: &self.last + &other.last,
            level: &self.level + &other.level,
            lift: &self.lift + &other.lift,
        }
    }

    /// `self - k * other`
    pub fn sub_scaled(&self, k: &BigInt, other: &SignedElement) -> SignedElement {
        let prefix: Vec<BigInt> = self.prefix.iter().zip(&other.prefix).map(|(a, b)| a - k * b).collect();
        SignedElement {
            level: prefix.iter().sum(),
            prefix,
            last: &self.last - k * &other.last,
            lift: self.lift.add_scaled(&-k, &other.lift),
        }
    }

    fn key(&self) -> (&[BigInt], &BigInt) {
        (&self.prefix, &self.last)
    }

    /// Processing order within a level: ascending `|last|`, then by value.
    pub(crate) fn processing_cmp(&self, other: &Self) -> Ordering {
        self.last
            .magnitude()
            .cmp(other.last.magnitude())
            .then_with(|| self.cmp(other))
    }
}

impl PartialEq for SignedElement {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for SignedElement {}

impl Hash for SignedElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for SignedElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}
