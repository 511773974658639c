use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::hilbert::{minimal_generators, Strategy};
use crate::lattice::integer_kernel;
use crate::vector::{IntMatrix, IntVector};

/// Outcome of one 0-1 improvement step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Improvement {
    /// A feasible 0-1 point of strictly lower cost.
    Improved { z: IntVector, cost: BigInt },
    /// No 0-1 augmenting vector of negative cost exists.
    Optimal,
}

/// Looks for a cheaper 0-1 solution of `Az = b` than `z0`.
///
/// Columns where `z0` is 1 are flipped so that `z0` becomes the origin;
/// improving moves are then the nonnegative kernel vectors bounded by 1
/// with negative transformed cost, and the truncated Hilbert basis
/// contains one if any exist. The lexicographically first is used.
pub fn improve_binary(a: &IntMatrix, b: &IntVector, c: &IntVector, z0: &IntVector) -> Result<Improvement> {
    let n = a.num_cols();
    if z0.dim() != n || c.dim() != n {
        return Err(Error::Argument(format!("cost and start point must have dimension {n}")));
    }
    if b.dim() != a.num_rows() {
        return Err(Error::Argument(format!(
            "right-hand side must have dimension {}",
            a.num_rows()
        )));
    }
    if !z0.iter().all(|x| x.is_zero() || x.is_one()) {
        return Err(Error::Argument("start point is not a 0-1 vector".into()));
    }
    if &a.mul_vec(z0) != b {
        return Err(Error::Argument("start point does not satisfy Az = b".into()));
    }
    let flip = |v: &IntVector| {
        IntVector::new(
            v.iter()
                .zip(z0.iter())
                .map(|(x, z)| if z.is_one() { -x } else { x.clone() })
                .collect(),
        )
    };
    let flipped_rows: Vec<IntVector> = a.rows().iter().map(&flip).collect();
    let flipped = IntMatrix::new(n, flipped_rows)?;
    let cost = flip(c);

    let kernel = integer_kernel(&flipped);
    let basis = minimal_generators(&kernel, &Bounds::uniform(n, 1), Strategy::default())?;
    let Some(v) = basis.iter().find(|v| cost.dot(v).is_negative()) else {
        return Ok(Improvement::Optimal);
    };
    let z = IntVector::new(
        z0.iter()
            .zip(v.iter())
            .map(|(z, d)| if d.is_one() { BigInt::one() - z } else { z.clone() })
            .collect(),
    );
    let cost = c.dot(&z);
    Ok(Improvement::Improved { z, cost })
}
