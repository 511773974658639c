//! Minimal generating sets of `Λ ∩ ℝ₊ⁿ` by project-and-lift.
//!
//! Coordinates are lifted one at a time. At each step the minimal elements
//! of the two half-monoids (`K⁺`, lifted coordinate `>= 0`, and `K⁻`,
//! `<= 0`) are completed from the previous step's `H_j⁺`; the `K⁺` part is
//! carried forward and, after the last column, is the answer.

pub(crate) mod completion;
mod element;
mod graded;
mod lift;

pub use completion::{complete_hb, minimize_hb, normal_form_hb, s_vector_hb};
pub use element::SignedElement;
pub use graded::{graded_step_hb, GradedSet};
pub use lift::{build_input_hb, choose_next_column, Engine, LiftState, Strategy};

use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::lattice::triangularize;
use crate::vector::{IntMatrix, IntVector};

#[derive(Clone, Debug, Default)]
pub struct HilbertOptions {
    /// Upper bounds in the caller's column order; `None` means unbounded.
    pub bounds: Option<Bounds>,
    pub strategy: Strategy,
    pub engine: Engine,
    /// Worker threads for candidate generation; `0` or `1` runs serially.
    /// Output does not depend on this value.
    pub threads: usize,
}

pub(crate) fn thread_pool(threads: usize) -> Result<Option<ThreadPool>> {
    if threads <= 1 {
        return Ok(None);
    }
    ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| Error::Config(format!("cannot start {threads} worker threads: {e}")))
}

/// Minimal generating set of `(Λ ∩ ℝ₊ⁿ, +)` for the lattice generated by
/// the rows of `generators`, intersected with `{z <= bounds}`. Sorted
/// lexicographically.
pub fn minimal_generators(generators: &IntMatrix, bounds: &Bounds, strategy: Strategy) -> Result<Vec<IntVector>> {
    minimal_generators_with(
        generators,
        &HilbertOptions {
            bounds: Some(bounds.clone()),
            strategy,
            ..HilbertOptions::default()
        },
    )
}

pub fn minimal_generators_with(generators: &IntMatrix, opts: &HilbertOptions) -> Result<Vec<IntVector>> {
    let n = generators.num_cols();
    if n == 0 {
        return Err(Error::Argument("generators have dimension zero".into()));
    }
    let basis = triangularize(generators);
    if basis.rank() == 0 {
        return Ok(Vec::new());
    }
    let bounds = opts.bounds.clone().unwrap_or_else(|| Bounds::unbounded(n));
    let pool = thread_pool(opts.threads)?;
    let mut state = LiftState::new(basis, &bounds)?;
    while !state.is_complete() {
        state.advance(opts.engine, opts.strategy, pool.as_ref())?;
    }
    Ok(state.finish())
}
