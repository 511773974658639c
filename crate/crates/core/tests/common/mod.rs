#![allow(dead_code)]

use conelift::{integer_kernel, IntMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, range: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-range..=range)).collect())
        .collect();
    let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64_rows(cols, &refs).unwrap()
}

/// Kernel lattice of a random `d × n` system with entries in `[-3, 3]`.
pub fn random_kernel(rng: &mut ChaCha8Rng) -> (IntMatrix, IntMatrix) {
    let d = rng.gen_range(1..=3);
    let n = rng.gen_range(3..=6);
    let a = random_matrix(rng, d, n, 3);
    let k = integer_kernel(&a);
    (a, k)
}
