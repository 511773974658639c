//! Lattice preprocessing: triangular generator form, integer kernels,
//! membership, and the sign-compatible divisibility order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::vector::{IntMatrix, IntVector};

/// Lattice generators in upper-triangular form.
///
/// Rows live in *working* column order: row `i` is zero in working columns
/// `0..i` and has the positive pivot in working column `i`. `col_perm[w]` is
/// the original index of working column `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularBasis {
    rows: Vec<IntVector>,
    col_perm: Vec<usize>,
    n: usize,
}

impl TriangularBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn pivot(&self, i: usize) -> &BigInt {
        &self.rows[i][i]
    }

    pub fn pivots(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.pivot(i).clone()).collect()
    }

    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    /// Working-order vector back to the caller's column order.
    pub fn to_original(&self, v: &IntVector) -> IntVector {
        v.unpermute(&self.col_perm)
    }

    /// Caller-order vector into working column order.
    pub fn to_working(&self, v: &IntVector) -> IntVector {
        v.permute(&self.col_perm)
    }

    /// Rows un-permuted into the caller's column order.
    pub fn original_rows(&self) -> IntMatrix {
        let rows = self.rows.iter().map(|r| self.to_original(r)).collect();
        IntMatrix::new(self.n, rows).expect("rows share the ambient dimension")
    }
}

/// Clears column `c` below row `r` by Euclid-style row operations and leaves
/// a positive gcd in `rows[r][c]`. Returns `false` when the column is already
/// zero from row `r` down.
fn eliminate_column(rows: &mut [IntVector], r: usize, c: usize) -> bool {
    loop {
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
        let Some(best) = best else {
            return false;
        };
        rows.swap(r, best);
        if rows[r][c].is_negative() {
            rows[r] = -&rows[r];
        }
        let mut done = true;
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let q = rows[i][c].div_floor(&rows[r][c]);
            rows[i] = rows[i].add_scaled(&-q, &rows[r]);
            if !rows[i][c].is_zero() {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
}

/// Brings every entry above pivot `(r, c)` into `[0, pivot)`.
fn reduce_above(rows: &mut [IntVector], r: usize, c: usize) {
    let (head, tail) = rows.split_at_mut(r);
    let pivot_row = &tail[0];
    for row in head.iter_mut() {
        let q = row[c].div_floor(&pivot_row[c]);
        if !q.is_zero() {
            *row = row.add_scaled(&-q, pivot_row);
        }
    }
}

/// Integral row operations plus column swaps to the triangular form used by
/// the lift engines. Dependent generators are dropped.
pub fn triangularize(generators: &IntMatrix) -> TriangularBasis {
    let n = generators.num_cols();
    let mut rows: Vec<IntVector> = generators.rows().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let nonzero_col = (c..n).find(|&cc| rows[r..].iter().any(|row| !row[cc].is_zero()));
        let Some(cc) = nonzero_col else {
            break;
        };
        if cc != c {
            for row in rows.iter_mut() {
                let tmp = row[c].clone();
                row[c] = row[cc].clone();
                row[cc] = tmp;
            }
            perm.swap(c, cc);
        }
        let found = eliminate_column(&mut rows, r, c);
        debug_assert!(found);
        reduce_above(&mut rows, r, c);
        r += 1;
    }
    rows.truncate(r);
    TriangularBasis {
        rows,
        col_perm: perm,
        n,
    }
}

/// A lattice basis of `{z in Z^n : A z = 0}`.
///
/// Row-reduces `[A^T | I]` on the `A^T` block; the identity block of every
/// row that becomes zero on the left is a kernel vector, and since the
/// transformation is unimodular those rows form a saturated basis. The
/// result is returned in echelon form with entries above pivots reduced.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.num_cols();
    let d = a.num_rows();
    let mut rows: Vec<IntVector> = (0..n)
        .map(|i| {
            let mut e: Vec<BigInt> = a.rows().iter().map(|row| row[i].clone()).collect();
            e.extend(IntVector::unit(n, i).into_entries());
            IntVector::new(e)
        })
        .collect();
    let mut r = 0;
    for c in 0..d {
        if r == rows.len() {
            break;
        }
        if eliminate_column(&mut rows, r, c) {
            r += 1;
        }
    }
    let kernel: Vec<IntVector> = rows[r..]
        .iter()
        .map(|row| IntVector::new(row.entries()[d..].to_vec()))
        .collect();
    let mut kernel = IntMatrix::new(n, kernel).expect("kernel rows have dimension n");
    if kernel.num_rows() > 0 {
        kernel = echelon_no_swap(kernel);
    }
    kernel
}

/// Echelon form without column swaps, above-pivot entries reduced.
fn echelon_no_swap(m: IntMatrix) -> IntMatrix {
    let n = m.num_cols();
    let mut rows = m.into_rows();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        if eliminate_column(&mut rows, r, c) {
            reduce_above(&mut rows, r, c);
            r += 1;
        }
    }
    rows.truncate(r);
    IntMatrix::new(n, rows).expect("rows keep their dimension")
}

/// First `j` coordinates of `v`.
pub fn project(v: &IntVector, j: usize) -> Result<IntVector> {
    v.project(j)
}

/// `u ⊑ v` on vectors of dimension `j1`: componentwise `<=` on the first
/// `j1 - 1` entries, and on the last entry `|u| <= |v|` with `u * v >= 0`.
pub fn sign_divides(u: &IntVector, v: &IntVector, j1: usize) -> Result<bool> {
    if u.dim() != j1 || v.dim() != j1 || j1 == 0 {
        return Err(Error::Argument(format!(
            "sign_divides expects two vectors of dimension {j1}, got {} and {}",
            u.dim(),
            v.dim()
        )));
    }
    let k = j1 - 1;
    Ok(sign_divides_parts(&u.entries()[..k], &u[k], &v.entries()[..k], &v[k]))
}

/// Split form of [`sign_divides`] shared by the engines.
#[inline]
pub(crate) fn sign_divides_parts(u_prefix: &[BigInt], u_last: &BigInt, v_prefix: &[BigInt], v_last: &BigInt) -> bool {
    if u_last.is_positive() && !v_last.is_positive() {
        return false;
    }
    if u_last.is_negative() && !v_last.is_negative() {
        return false;
    }
    if u_last.magnitude() > v_last.magnitude() {
        return false;
    }
    u_prefix.iter().zip(v_prefix).all(|(a, b)| a <= b)
}

/// Whether `v` (in the caller's column order) is an integer combination of
/// the basis rows, decided by back-substitution along the pivots.
pub fn lattice_member(basis: &TriangularBasis, v: &IntVector) -> bool {
    if v.dim() != basis.dim() {
        return false;
    }
    let mut rest = basis.to_working(v);
    for i in 0..basis.rank() {
        let (q, r) = rest[i].div_rem(basis.pivot(i));
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            rest = rest.add_scaled(&-q, basis.row(i));
        }
    }
    rest.is_zero()
}
