//! Exact rational linear algebra used outside the lift engines: ranks,
//! nullspaces, and pullbacks through a linear map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::vector::{IntMatrix, IntVector};

type Row = Vec<BigRational>;

fn to_rational_rows(rows: &[IntVector]) -> Vec<Row> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut Vec<Row>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).take(ncols) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A basis of the rational row space, each row scaled to a primitive
/// integer vector.
pub fn row_basis(rows: &[IntVector], ncols: usize) -> Vec<IntVector> {
    let mut m = to_rational_rows(rows);
    rref(&mut m, ncols);
    m.iter().map(|r| primitive(r)).collect()
}

pub fn rank(rows: &[IntVector], ncols: usize) -> usize {
    let mut m = to_rational_rows(rows);
    rref(&mut m, ncols).len()
}

pub fn matrix_rank(m: &IntMatrix) -> usize {
    rank(m.rows(), m.num_cols())
}

/// Basis of `{x : rows * x = 0}` over the rationals.
pub fn nullspace(rows: &[IntVector], ncols: usize) -> Vec<Row> {
    let mut m = to_rational_rows(rows);
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Solves `a * x = b`. Returns `None` when the system is inconsistent and
/// an arbitrary particular solution otherwise (unique iff `a` has full
/// column rank).
pub fn solve(a: &IntMatrix, b: &IntVector) -> Option<Row> {
    let n = a.num_cols();
    let mut m: Vec<Row> = a
        .rows()
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut row: Row = r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.push(BigRational::from_integer(bi.clone()));
            row
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][n].clone();
    }
    Some(x)
}

/// The primitive integer vector on the positive ray through `x`.
/// Returns the zero vector for zero input.
pub fn primitive(x: &[BigRational]) -> IntVector {
    let lcm = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let v = IntVector::new(ints);
    let g = v.content();
    if g.is_zero() || g.is_one() {
        v
    } else {
        IntVector::new(v.iter().map(|e| e / &g).collect())
    }
}

/// Integer vector if every entry of `x` is integral.
pub fn integral(x: &[BigRational]) -> Option<IntVector> {
    x.iter()
        .map(|q| q.is_integer().then(|| q.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(IntVector::new)
}
