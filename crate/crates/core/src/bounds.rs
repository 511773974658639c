use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::vector::IntVector;

/// Per-coordinate upper bounds; `None` is an infinite bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds(Vec<Option<BigInt>>);

impl Bounds {
    pub fn new(limits: Vec<Option<BigInt>>) -> Result<Self> {
        if limits.iter().flatten().any(|b| b.is_negative()) {
            return Err(Error::Argument("bounds must be nonnegative".into()));
        }
        Ok(Bounds(limits))
    }

    pub fn unbounded(n: usize) -> Self {
        Bounds(vec![None; n])
    }

    pub fn uniform(n: usize, limit: u64) -> Self {
        Bounds(vec![Some(BigInt::from(limit)); n])
    }

    pub fn from_vector(v: &IntVector) -> Result<Self> {
        Self::new(v.iter().cloned().map(Some).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn limits(&self) -> &[Option<BigInt>] {
        &self.0
    }

    pub fn limit(&self, i: usize) -> Option<&BigInt> {
        self.0[i].as_ref()
    }

    pub fn is_unbounded(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }

    pub fn admits(&self, i: usize, value: &BigInt) -> bool {
        self.0[i].as_ref().is_none_or(|b| value <= b)
    }

    /// Componentwise `v <= limits`, with infinity absorbing.
    pub fn contains(&self, v: &IntVector) -> bool {
        v.dim() == self.dim() && (0..v.dim()).all(|i| self.admits(i, &v[i]))
    }

    /// Bounds rearranged into working-column order (`out[w] = self[perm[w]]`).
    pub fn permute(&self, perm: &[usize]) -> Bounds {
        Bounds(perm.iter().map(|&c| self.0[c].clone()).collect())
    }
}

impl FromStr for Bounds {
    type Err = Error;

    /// Comma-separated list of nonnegative integers or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let limits = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.eq_ignore_ascii_case("inf") {
                    Ok(None)
                } else {
                    tok.parse::<BigInt>()
                        .map(Some)
                        .map_err(|_| Error::Argument(format!("bad bound `{tok}`")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Bounds::new(limits)
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match b {
                Some(b) => write!(f, "{b}")?,
                None => write!(f, "inf")?,
            }
        }
        Ok(())
    }
}
