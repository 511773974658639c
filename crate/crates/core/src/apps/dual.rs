use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::hilbert::{minimal_generators, Strategy};
use crate::rational::{integral, matrix_rank, primitive, solve};
use crate::rays::extreme_rays;
use crate::vector::{IntMatrix, IntVector};

/// Extreme rays and Hilbert basis of `C^D = {v : Pv >= 0}`, where the rows
/// of `P` generate the primal cone `C`. Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualConeResult {
    /// Facet normals of `C`, as primitive integer vectors.
    pub rays: Vec<IntVector>,
    pub hilbert: Vec<IntVector>,
}

/// Computes the dual cone of `cone(p₁…pₛ)` through the map `v ↦ Pv`,
/// which identifies `C^D` with `span(columns of P) ∩ ℝ₊ˢ` and its integer
/// points with the lattice spanned by the columns.
pub fn dual_cone(p: &IntMatrix) -> Result<DualConeResult> {
    let n = p.num_cols();
    if p.num_rows() == 0 || n == 0 {
        return Err(Error::Argument("generator matrix is empty".into()));
    }
    if let Some(i) = p.rows().iter().position(IntVector::is_zero) {
        return Err(Error::Argument(format!("generator {} is zero", i + 1)));
    }
    let r = matrix_rank(p);
    if r < n {
        return Err(Error::Degenerate(format!(
            "generators span a {r}-dimensional space in dimension {n}; the dual cone contains a line"
        )));
    }
    let columns = p.transpose();
    let s = p.num_rows();

    let pull_back =
        |u: &IntVector| solve(p, u).ok_or_else(|| Error::Degenerate(format!("{u} is not in the image of P")));
    let mut rays = extreme_rays(&columns)?
        .iter()
        .map(|u| pull_back(u).map(|v| primitive(&v)))
        .collect::<Result<Vec<_>>>()?;
    rays.sort();
    let mut hilbert = minimal_generators(&columns, &Bounds::unbounded(s), Strategy::default())?
        .iter()
        .map(|u| {
            pull_back(u).and_then(|v| {
                integral(&v).ok_or_else(|| Error::Degenerate(format!("{u} pulls back to a fractional point")))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    hilbert.sort();
    Ok(DualConeResult { rays, hilbert })
}

/// Hilbert basis of `cone(p₁…pₛ) ∩ ℤⁿ`: the facet normals of the cone are
/// the rays of its dual, and the cone is the dual of those.
pub fn hilbert_from_generators(p: &IntMatrix) -> Result<Vec<IntVector>> {
    let facets = dual_cone(p)?.rays;
    let facets = IntMatrix::new(p.num_cols(), facets)?;
    Ok(dual_cone(&facets)?.hilbert)
}
