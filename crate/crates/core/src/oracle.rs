//! Brute-force references. Slow by construction; they enumerate instead of
//! lifting and are meant for desk-scale validation only.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::hilbert::completion::prefix_admitted;
use crate::hilbert::{build_input_hb, choose_next_column, graded_step_hb, Engine, LiftState, SignedElement, Strategy};
use crate::lattice::triangularize;
use crate::rational::{integral, nullspace, primitive, row_basis, solve};
use crate::vector::{IntMatrix, IntVector};

/// Maximum number of lattice points `brute_hilbert` will enumerate.
pub const ENUMERATION_BUDGET: usize = 10_000_000;
/// Largest ambient dimension `brute_rays` accepts.
pub const MAX_RAY_DIM: usize = 12;

/// Minimal elements among the lattice points in `[0, box_size]ⁿ`: the
/// points that are not a sum of two nonzero such points.
pub fn brute_hilbert(generators: &IntMatrix, box_size: u64) -> Result<Vec<IntVector>> {
    brute_hilbert_with_budget(generators, box_size, ENUMERATION_BUDGET)
}

pub fn brute_hilbert_with_budget(generators: &IntMatrix, box_size: u64, budget: usize) -> Result<Vec<IntVector>> {
    let points = box_points_with_budget(generators, box_size, budget)?;
    let mut points: Vec<Vec<i64>> = points.into_iter().filter(|p| p.iter().any(|&x| x != 0)).collect();
    points.sort_by_key(|p| (p.iter().sum::<i64>(), p.clone()));
    let mut minimal: Vec<Vec<i64>> = Vec::new();
    for z in points {
        let covered = minimal.iter().any(|h| h.iter().zip(&z).all(|(a, b)| a <= b));
        if !covered {
            minimal.push(z);
        }
    }
    let mut out: Vec<IntVector> = minimal.iter().map(|v| IntVector::from_i64s(v)).collect();
    out.sort();
    Ok(out)
}

/// All lattice points in `[0, box_size]ⁿ`, in the caller's column order.
///
/// Coefficients of the triangular generators are enumerated pivot by pivot;
/// the range of each coefficient is cut to keep its pivot coordinate in
/// the box.
pub fn box_points(generators: &IntMatrix, box_size: u64) -> Result<Vec<Vec<i64>>> {
    box_points_with_budget(generators, box_size, ENUMERATION_BUDGET)
}

fn box_points_with_budget(generators: &IntMatrix, box_size: u64, budget: usize) -> Result<Vec<Vec<i64>>> {
    let n = generators.num_cols();
    let basis = triangularize(generators);
    let s = basis.rank();
    let bound = BigInt::from(box_size);
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut visited = 0usize;

    fn walk(
        level: usize,
        partial: IntVector,
        basis: &crate::lattice::TriangularBasis,
        bound: &BigInt,
        budget: usize,
        visited: &mut usize,
        found: &mut Vec<Vec<i64>>,
    ) -> Result<()> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::Resource(format!("box enumeration exceeds {budget} points")));
        }
        if level == basis.rank() {
            if partial.iter().all(|x| !x.is_negative() && x <= bound) {
                let orig = basis.to_original(&partial);
                found.push(orig.iter().map(|x| x.to_i64().expect("inside the box")).collect());
            }
            return Ok(());
        }
        let p = basis.pivot(level);
        let here = &partial[level];
        let lo = (-here).div_ceil(p);
        let hi = (bound - here).div_floor(p);
        let mut c = lo;
        while c <= hi {
            let next = partial.add_scaled(&c, basis.row(level));
            walk(level + 1, next, basis, bound, budget, visited, found)?;
            c += 1;
        }
        Ok(())
    }

    if s == 0 {
        return Ok(vec![vec![0; n]]);
    }
    walk(0, IntVector::zeros(n), &basis, &bound, budget, &mut visited, &mut found)?;
    Ok(found)
}

/// Extreme rays of `span(rows) ∩ ℝ₊ⁿ` by scanning every candidate support:
/// a support contributes a ray when the span vectors vanishing off it form
/// a line containing a vector that is nonnegative with exactly that support.
pub fn brute_rays(generators: &IntMatrix) -> Result<Vec<IntVector>> {
    let n = generators.num_cols();
    if n > MAX_RAY_DIM {
        return Err(Error::Resource(format!(
            "brute_rays is limited to dimension {MAX_RAY_DIM}"
        )));
    }
    let basis = row_basis(generators.rows(), n);
    let r = basis.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut out: HashSet<IntVector> = HashSet::new();
    for mask in 1u32..(1 << n) {
        let zero_cols: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        // constraints on the coefficient vector λ: (λᵀB)_i = 0 off the support
        let constraints: Vec<IntVector> = zero_cols
            .iter()
            .map(|&i| IntVector::new(basis.iter().map(|b| b[i].clone()).collect()))
            .collect();
        let ns = nullspace(&constraints, r);
        if ns.len() != 1 {
            continue;
        }
        let lambda = primitive(&ns[0]);
        let z = basis
            .iter()
            .zip(lambda.iter())
            .fold(IntVector::zeros(n), |acc, (b, l)| acc.add_scaled(l, b));
        let exact = (0..n).all(|i| (mask & (1 << i) != 0) != z[i].is_zero());
        if !exact {
            continue;
        }
        let z = if z.iter().all(|x| !x.is_negative()) {
            z
        } else if z.iter().all(|x| !x.is_positive()) {
            -&z
        } else {
            continue;
        };
        let g = z.content();
        out.insert(IntVector::new(z.iter().map(|x| x / &g).collect()));
    }
    let mut out: Vec<IntVector> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Facet normals of `cone(rows of p)`, primitive and sorted, from the
/// support scan of `brute_rays` on the column span of `p`.
pub fn brute_cone_facets(p: &IntMatrix) -> Result<Vec<IntVector>> {
    let mut out = brute_rays(&p.transpose())?
        .iter()
        .map(|u| pull_back(p, u).map(|v| primitive(&v)))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Hilbert basis elements `v` of `cone(rows of p) ∩ ℤⁿ` with `Fv <= box`,
/// where `F` holds the facet normals: the cone is written as
/// `{v : Fv >= 0}` and the lattice `Fℤⁿ` is enumerated in `[0, box]`.
pub fn brute_cone_hilbert(p: &IntMatrix, box_size: u64) -> Result<Vec<IntVector>> {
    let facets = IntMatrix::new(p.num_cols(), brute_cone_facets(p)?)?;
    if crate::rational::matrix_rank(&facets) < p.num_cols() {
        return Err(Error::Degenerate("cone is not full-dimensional and pointed".into()));
    }
    let mut out = brute_hilbert(&facets.transpose(), box_size)?
        .iter()
        .map(|u| {
            pull_back(&facets, u).and_then(|v| {
                integral(&v).ok_or_else(|| Error::Degenerate(format!("{u} pulls back to a fractional point")))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn pull_back(p: &IntMatrix, u: &IntVector) -> Result<Vec<num_rational::BigRational>> {
    solve(p, u).ok_or_else(|| Error::Degenerate(format!("{u} is not in the image")))
}

/// Whether `z` is a nonnegative integer combination of `h`: repeated
/// subtraction of elements `<=` the remainder (lexicographically first
/// first), backtracking over the choice when a path dead-ends.
pub fn check_decomposition(h: &[IntVector], z: &IntVector) -> bool {
    if !z.is_nonnegative() {
        return false;
    }
    let mut sorted: Vec<&IntVector> = h.iter().filter(|v| !v.is_zero()).collect();
    sorted.sort();
    let mut failed: HashSet<IntVector> = HashSet::new();

    fn search(rest: &IntVector, h: &[&IntVector], failed: &mut HashSet<IntVector>) -> bool {
        if rest.is_zero() {
            return true;
        }
        if failed.contains(rest) {
            return false;
        }
        for g in h {
            if g.leq(rest) && search(&(rest - g), h, failed) {
                return true;
            }
        }
        failed.insert(rest.clone());
        false
    }

    search(z, &sorted, &mut failed)
}

/// Lattice points of `{z : A z = 0}` in `[0, box_size]ⁿ` by direct
/// enumeration of the box. Independent of any basis computation.
pub fn kernel_box_points(a: &IntMatrix, box_size: u64) -> Vec<Vec<i64>> {
    let n = a.num_cols();
    let rows: Vec<Vec<i64>> = a
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small matrix entries")).collect())
        .collect();
    let b = box_size as i64;
    let mut out = Vec::new();
    let mut z = vec![0i64; n];
    loop {
        if rows
            .iter()
            .all(|r| r.iter().zip(&z).map(|(x, y)| x * y).sum::<i64>() == 0)
        {
            out.push(z.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if z[i] < b {
                z[i] += 1;
                break;
            }
            z[i] = 0;
            i += 1;
        }
    }
}

/// Minimal nonzero elements of a point set under componentwise `<=`.
pub fn minimal_points(points: &[Vec<i64>]) -> Vec<IntVector> {
    let mut pts: Vec<&Vec<i64>> = points.iter().filter(|p| p.iter().any(|&x| x != 0)).collect();
    pts.sort_by_key(|p| (p.iter().sum::<i64>(), (*p).clone()));
    let mut minimal: Vec<&Vec<i64>> = Vec::new();
    for z in pts {
        if !minimal.iter().any(|h| h.iter().zip(z).all(|(a, b)| a <= b)) {
            minimal.push(z);
        }
    }
    let mut out: Vec<IntVector> = minimal.iter().map(|v| IntVector::from_i64s(v)).collect();
    out.sort();
    out
}

/// Replays the graded lift of `generators` and, at every step, forms all
/// opposite-sign sums of accepted elements whose level lies in
/// `k*+1 ..= 2k*`, where `k*` is the level at which the step stopped.
/// Returns how many of those sums are not sign-divided by an accepted
/// element.
pub fn stop_rule_violations(generators: &IntMatrix, bounds: &Bounds, strategy: Strategy) -> Result<usize> {
    let basis = triangularize(generators);
    if basis.rank() == 0 {
        return Ok(0);
    }
    let rank = basis.rank();
    let mut state = LiftState::new(basis, bounds)?;
    let mut violations = 0;
    while !state.is_complete() {
        let next = choose_next_column(&state, strategy)?;
        let j = state.j();
        let input = build_input_hb(&state, next);
        let stage_bounds = state.bounds().permute(state.lifted_cols());
        let pivot = (j < rank).then(|| state.basis().pivot(j).clone());
        let graded = graded_step_hb(&input, pivot.as_ref(), &stage_bounds, None)?;
        let k = BigInt::from(graded.stop_level());
        let accepted: Vec<&SignedElement> = graded.elements().collect();
        for (i, f) in accepted.iter().enumerate() {
            for g in &accepted[i + 1..] {
                if !f.opposes(g) {
                    continue;
                }
                let z = f.sum(g);
                let level = z.level();
                if *level <= k || *level > &k * 2 || !prefix_admitted(&stage_bounds, z.prefix()) {
                    continue;
                }
                if !accepted.iter().any(|e| e.divides(&z)) {
                    violations += 1;
                }
            }
        }
        state.advance(Engine::Graded, strategy, None)?;
    }
    Ok(violations)
}
