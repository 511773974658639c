//! Hilbert bases and extreme rays of cones `span(p₁…pₛ) ∩ ℝ₊ⁿ` by
//! project-and-lift completion, in exact integer arithmetic.
//!
//! The two engines are [`hilbert::minimal_generators`] (minimal generating
//! set of the monoid `Λ ∩ ℝ₊ⁿ`, optionally truncated by upper bounds) and
//! [`rays::extreme_rays`]. [`apps`] builds vector decomposition, dual cones,
//! Hilbert bases of cones given by generators, a 0-1 improvement step and
//! magic-square systems on top of them. [`oracle`] holds brute-force
//! references used to validate both engines.

pub mod apps;
mod bounds;
mod error;
pub mod hilbert;
pub mod lattice;
pub mod oracle;
pub mod rational;
pub mod rays;
mod vector;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use hilbert::{minimal_generators, minimal_generators_with, Engine, HilbertOptions, Strategy};
pub use lattice::{integer_kernel, lattice_member, project, sign_divides, triangularize, TriangularBasis};
pub use rays::extreme_rays;
pub use vector::{IntMatrix, IntVector};

pub use num_bigint::BigInt;
