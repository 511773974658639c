//! Applications built on the two engines.

mod decompose;
mod dual;
mod improve;
mod magic;

pub use decompose::{decompose, Decomposition};
pub use dual::{dual_cone, hilbert_from_generators, DualConeResult};
pub use improve::{improve_binary, Improvement};
pub use magic::magic_system;
