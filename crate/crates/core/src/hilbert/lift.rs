use std::fmt;
use std::str::FromStr;

use log::info;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::ThreadPool;

use super::completion::{complete_hb, minimize_hb};
use super::element::SignedElement;
use super::graded::graded_step_hb;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::lattice::TriangularBasis;
use crate::vector::IntVector;

/// Rule for picking the next column once every pivot column is lifted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// First remaining column.
    #[default]
    InputOrder,
    /// Fewest pairs of opposite-sign lift coordinates.
    MinPairs,
    /// Most zero lift coordinates.
    MaxZeros,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::InputOrder, Strategy::MinPairs, Strategy::MaxZeros];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::InputOrder => "input-order",
            Strategy::MinPairs => "min-pairs",
            Strategy::MaxZeros => "max-zeros",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown column strategy `{s}`")))
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which completion procedure computes each lift step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Level-by-level generation with reducibility tests only.
    #[default]
    Graded,
    /// Critical-pair completion with normal-form reduction, minimized after.
    Completion,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Graded => "graded",
            Engine::Completion => "completion",
        }
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graded" => Ok(Engine::Graded),
            "completion" => Ok(Engine::Completion),
            _ => Err(Error::Config(format!("unknown engine `{s}`"))),
        }
    }
}

/// State between lift steps: `current` holds one full lattice vector (in
/// working column order) for each element of `H_j⁺`, whose `j`-prefix on
/// the `lifted` columns is that element.
#[derive(Clone, Debug)]
pub struct LiftState {
    basis: TriangularBasis,
    bounds: Bounds,
    lifted: Vec<usize>,
    remaining: Vec<usize>,
    current: Vec<IntVector>,
}

impl LiftState {
    /// `H₁⁺ = {(p₁₁)}`, or empty when the bound on the first column is
    /// below the pivot. `bounds` are in the caller's column order.
    pub fn new(basis: TriangularBasis, bounds: &Bounds) -> Result<Self> {
        let n = basis.dim();
        if bounds.dim() != n {
            return Err(Error::Argument(format!(
                "{} bounds given for dimension {n}",
                bounds.dim()
            )));
        }
        if basis.rank() == 0 {
            return Err(Error::Argument("lattice has rank zero".into()));
        }
        let bounds = bounds.permute(basis.col_perm());
        let current = if bounds.admits(0, basis.pivot(0)) {
            vec![basis.row(0).clone()]
        } else {
            Vec::new()
        };
        Ok(LiftState {
            bounds,
            lifted: vec![0],
            remaining: (1..n).collect(),
            current,
            basis,
        })
    }

    /// Direct construction, mainly for exercising column selection.
    pub fn from_parts(
        basis: TriangularBasis,
        bounds: Bounds,
        lifted: Vec<usize>,
        remaining: Vec<usize>,
        current: Vec<IntVector>,
    ) -> Self {
        LiftState {
            basis,
            bounds,
            lifted,
            remaining,
            current,
        }
    }

    pub fn basis(&self) -> &TriangularBasis {
        &self.basis
    }

    /// Number of lifted coordinates.
    pub fn j(&self) -> usize {
        self.lifted.len()
    }

    pub fn lifted_cols(&self) -> &[usize] {
        &self.lifted
    }

    pub fn remaining_cols(&self) -> &[usize] {
        &self.remaining
    }

    pub fn current(&self) -> &[IntVector] {
        &self.current
    }

    /// Bounds in working column order.
    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn is_complete(&self) -> bool {
        self.remaining.is_empty()
    }

    /// Replaces the bounds (working order) and drops elements of `H_j⁺`
    /// that no longer fit on the lifted columns.
    pub fn tighten(&mut self, bounds: Bounds) {
        self.bounds = bounds;
        let (lifted, b) = (&self.lifted, &self.bounds);
        self.current.retain(|v| lifted.iter().all(|&c| b.admits(c, &v[c])));
    }

    /// Bounds on the lifted columns, in lift order.
    fn stage_bounds(&self) -> Bounds {
        self.bounds.permute(&self.lifted)
    }

    /// Performs one step `H_j⁺ → H_{j+1}⁺`.
    pub fn advance(&mut self, engine: Engine, strategy: Strategy, pool: Option<&ThreadPool>) -> Result<()> {
        let next = choose_next_column(self, strategy)?;
        let j = self.j();
        let input = build_input_hb(self, next);
        let stage_bounds = self.stage_bounds();
        let pivot = (j < self.basis.rank()).then(|| self.basis.pivot(j));
        let step: Vec<SignedElement> = match engine {
            Engine::Graded => graded_step_hb(&input, pivot, &stage_bounds, pool)?.into_elements(),
            Engine::Completion => minimize_hb(&complete_hb(&input, &stage_bounds)),
        };
        let total = step.len();
        let mut current: Vec<IntVector> = step
            .into_iter()
            .filter(|e| !e.last().is_negative() && self.bounds.admits(next, e.last()))
            .map(SignedElement::into_lift)
            .collect();
        current.sort();
        self.current = current;
        self.lifted.push(next);
        self.remaining.retain(|&c| c != next);
        info!(
            "lifted column {} ({}/{}): {} minimal elements in K+ u K-, |H+| = {}",
            self.basis.col_perm()[next],
            self.j(),
            self.basis.dim(),
            total,
            self.current.len()
        );
        Ok(())
    }

    /// The finished minimal set in the caller's column order, sorted.
    pub fn finish(&self) -> Vec<IntVector> {
        debug_assert!(self.is_complete());
        let mut out: Vec<IntVector> = self.current.iter().map(|v| self.basis.to_original(v)).collect();
        out.sort();
        out
    }
}

/// Next working column to lift. While pivot columns remain the order is
/// forced by the triangular structure; afterwards `strategy` decides.
pub fn choose_next_column(state: &LiftState, strategy: Strategy) -> Result<usize> {
    let remaining = state.remaining_cols();
    let Some(&first) = remaining.first() else {
        return Err(Error::Argument("no column left to lift".into()));
    };
    if state.j() < state.basis().rank() || remaining.len() == 1 {
        return Ok(first);
    }
    let signs = |c: usize| {
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        for v in state.current() {
            if v[c].is_positive() {
                pos += 1;
            } else if v[c].is_negative() {
                neg += 1;
            } else {
                zero += 1;
            }
        }
        (pos, neg, zero)
    };
    let pick = match strategy {
        Strategy::InputOrder => first,
        // ties go to the earliest remaining column
        Strategy::MinPairs => *remaining
            .iter()
            .min_by_key(|&&c| {
                let (p, n, _) = signs(c);
                p * n
            })
            .unwrap(),
        Strategy::MaxZeros => *remaining.iter().rev().max_by_key(|&&c| signs(c).2).unwrap(),
    };
    Ok(pick)
}

/// Input set for lifting column `next`: one lift per element of `H_j⁺`
/// (its coordinate reduced into `[0, p)` while `j < s`), plus `±p_{j+1}`
/// while `j < s`.
pub fn build_input_hb(state: &LiftState, next: usize) -> Vec<SignedElement> {
    let j = state.j();
    let basis = state.basis();
    let lifted = state.lifted_cols();
    let mut out = Vec::with_capacity(state.current().len() + 2);
    if j < basis.rank() {
        debug_assert_eq!(next, j);
        let p_row = basis.row(j);
        let p = basis.pivot(j);
        for v in state.current() {
            let q = v[next].div_floor(p);
            let lift = if q.is_zero() {
                v.clone()
            } else {
                v.add_scaled(&-q, p_row)
            };
            out.push(SignedElement::from_lift(lift, lifted, next));
        }
        out.push(SignedElement::from_lift(p_row.clone(), lifted, next));
        out.push(SignedElement::from_lift(-p_row, lifted, next));
    } else {
        for v in state.current() {
            out.push(SignedElement::from_lift(v.clone(), lifted, next));
        }
    }
    out
}
