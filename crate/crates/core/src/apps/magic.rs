use crate::vector::{IntMatrix, IntVector};

/// Homogeneous equations for `n × n` magic squares over the row-major
/// entries: every row and column sum (and both diagonals when
/// `diagonals` is set) minus the first row sum. Zero rows are dropped, so
/// `n = 1` gives a matrix with no rows.
pub fn magic_system(n: usize, diagonals: bool) -> IntMatrix {
    let nn = n * n;
    let line = |cells: &mut dyn Iterator<Item = usize>| {
        let mut v = vec![0i64; nn];
        for c in cells {
            v[c] += 1;
        }
        v
    };
    let mut lines: Vec<Vec<i64>> = Vec::new();
    for r in 0..n {
        lines.push(line(&mut (0..n).map(|c| r * n + c)));
    }
    for c in 0..n {
        lines.push(line(&mut (0..n).map(|r| r * n + c)));
    }
    if diagonals {
        lines.push(line(&mut (0..n).map(|i| i * n + i)));
        lines.push(line(&mut (0..n).map(|i| i * n + (n - 1 - i))));
    }
    let rows: Vec<IntVector> = lines
        .iter()
        .skip(1)
        .map(|l| IntVector::from_i64s(&l.iter().zip(&lines[0]).map(|(a, b)| a - b).collect::<Vec<_>>()))
        .filter(|v| !v.is_zero())
        .collect();
    IntMatrix::new(nn, rows).expect("rows have n² entries")
}
