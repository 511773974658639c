//! Dense arbitrary-precision integer vectors and matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Unit vector `e_i` of dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn norm1(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &BigInt, other: &IntVector) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &IntVector) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Non-negative gcd of all entries; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    /// First `j` entries.
    pub fn project(&self, j: usize) -> Result<IntVector> {
        if j == 0 || j > self.dim() {
            return Err(Error::Argument(format!(
                "projection index {j} outside 1..={}",
                self.dim()
            )));
        }
        Ok(IntVector(self.0[..j].to_vec()))
    }

    /// Reorders entries so that `out[perm[w]] = self[w]`.
    pub fn unpermute(&self, perm: &[usize]) -> IntVector {
        let mut out = vec![BigInt::zero(); self.dim()];
        for (w, &orig) in perm.iter().enumerate() {
            out[orig] = self.0[w].clone();
        }
        IntVector(out)
    }

    /// Inverse of [`IntVector::unpermute`]: `out[w] = self[perm[w]]`.
    pub fn permute(&self, perm: &[usize]) -> IntVector {
        IntVector(perm.iter().map(|&orig| self.0[orig].clone()).collect())
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for IntVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        IntVector(v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-major integer matrix. The column count is stored separately so that a
/// matrix with zero rows still knows its width.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<IntVector>,
}

impl IntMatrix {
    pub fn new(cols: usize, rows: Vec<IntVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::Argument(format!(
                "row of dimension {} in a matrix with {cols} columns",
                bad.dim()
            )));
        }
        Ok(IntMatrix { cols, rows })
    }

    pub fn empty(cols: usize) -> Self {
        IntMatrix { cols, rows: Vec::new() }
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(cols, rows.iter().map(|r| IntVector::from_i64s(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            cols: n,
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<IntVector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.cols)
            .map(|c| IntVector::new(self.rows.iter().map(|r| r[c].clone()).collect()))
            .collect();
        IntMatrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// `self * v`
    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        debug_assert_eq!(v.dim(), self.cols);
        IntVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    /// Rows sorted lexicographically ascending, duplicates removed.
    pub fn sorted_unique(mut rows: Vec<IntVector>, cols: usize) -> IntMatrix {
        rows.sort();
        rows.dedup();
        IntMatrix { cols, rows }
    }
}
