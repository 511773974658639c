//! Matrix files: a header line `m n`, then `m` lines of `n` integers.
//! Lines whose first non-blank character is `#` are comments. A file may
//! hold several matrices one after another.

use std::fmt::Write as _;
use std::str::FromStr;

use conelift::{BigInt, IntMatrix, IntVector};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} matrices, found {found}")]
    Count { expected: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Every matrix in `text`, in order.
pub fn read_matrices(text: &str) -> Result<Vec<IntMatrix>, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((no, header)) = lines.next() {
        let dims: Vec<&str> = header.split_whitespace().collect();
        let [m, n] = dims[..] else {
            return Err(syntax(no, format!("expected a header `rows cols`, got `{header}`")));
        };
        let m: usize = m.parse().map_err(|_| syntax(no, format!("bad row count `{m}`")))?;
        let n: usize = n.parse().map_err(|_| syntax(no, format!("bad column count `{n}`")))?;
        let mut rows = Vec::with_capacity(m);
        for r in 0..m {
            let (no, line) = lines
                .next()
                .ok_or_else(|| syntax(no, format!("matrix declares {m} rows, file ends after {r}")))?;
            let entries = line
                .split_whitespace()
                .map(|t| BigInt::from_str(t).map_err(|_| syntax(no, format!("bad integer `{t}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != n {
                return Err(syntax(no, format!("expected {n} entries, found {}", entries.len())));
            }
            rows.push(IntVector::new(entries));
        }
        out.push(IntMatrix::new(n, rows).expect("row lengths checked"));
    }
    Ok(out)
}

/// The single matrix in `text`.
pub fn read_matrix(text: &str) -> Result<IntMatrix, FormatError> {
    let mut all = read_matrices(text)?;
    if all.len() != 1 {
        return Err(FormatError::Count {
            expected: 1,
            found: all.len(),
        });
    }
    Ok(all.pop().unwrap())
}

/// A vector stored as a one-row matrix.
pub fn read_vector(text: &str) -> Result<IntVector, FormatError> {
    let m = read_matrix(text)?;
    if m.num_rows() != 1 {
        return Err(syntax(1, format!("expected a single row, found {}", m.num_rows())));
    }
    Ok(m.into_rows().pop().unwrap())
}

/// Writes `m` with its rows in the given order.
pub fn write_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{} {}\n", m.num_rows(), m.num_cols());
    for row in m.rows() {
        let mut first = true;
        for x in row.iter() {
            if !first {
                s.push(' ');
            }
            first = false;
            write!(s, "{x}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// Writes `rows` sorted lexicographically.
pub fn write_rows(cols: usize, rows: &[IntVector]) -> String {
    write_matrix(&IntMatrix::sorted_unique(rows.to_vec(), cols))
}
