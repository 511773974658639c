//! Benchmark instances shared by the criterion targets.

use conelift::apps::magic_system;
use conelift::{integer_kernel, IntMatrix};

/// Kernel lattice basis of the `n×n` magic-square system.
pub fn magic_lattice(n: usize, diagonals: bool) -> IntMatrix {
    integer_kernel(&magic_system(n, diagonals))
}

/// `ker [1 2 ... k -m]`, a one-equation knapsack lattice.
pub fn knapsack_lattice(k: i64, m: i64) -> IntMatrix {
    let mut row: Vec<i64> = (1..=k).collect();
    row.push(-m);
    integer_kernel(&IntMatrix::from_i64_rows(row.len(), &[&row]).expect("one row"))
}
