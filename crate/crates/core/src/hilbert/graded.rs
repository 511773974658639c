//! Reduction-free completion: minimal elements are generated level by level
//! in the 1-norm of the prefix, and each candidate only needs a
//! reducibility test against the levels below it.

use std::collections::BTreeMap;

use log::debug;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use rayon::ThreadPool;

use super::completion::{prefix_admitted, s_vector_hb};
use super::element::SignedElement;
use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// The minimal elements of one lift step, bucketed by prefix level.
#[derive(Clone, Debug, Default)]
pub struct GradedSet {
    buckets: BTreeMap<u64, Vec<SignedElement>>,
    stop_level: u64,
}

impl GradedSet {
    pub fn buckets(&self) -> &BTreeMap<u64, Vec<SignedElement>> {
        &self.buckets
    }

    pub fn bucket(&self, level: u64) -> &[SignedElement] {
        self.buckets.get(&level).map_or(&[], Vec::as_slice)
    }

    /// Largest level holding an element.
    pub fn max_nonempty(&self) -> Option<u64> {
        self.buckets.keys().next_back().copied()
    }

    /// The `k` at which the stopping rule fired: levels `k+1 ..= 2k` were
    /// all empty.
    pub fn stop_level(&self) -> u64 {
        self.stop_level
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &SignedElement> {
        self.buckets.values().flatten()
    }

    pub fn into_elements(self) -> Vec<SignedElement> {
        self.buckets.into_values().flatten().collect()
    }

    fn insert(&mut self, level: u64, e: SignedElement) {
        self.buckets.entry(level).or_default().push(e);
    }
}

fn level_of(e: &SignedElement) -> Result<u64> {
    e.level()
        .to_u64()
        .ok_or_else(|| Error::Resource(format!("prefix level {} does not fit in 64 bits", e.level())))
}

/// Level-zero pair `±π(p)` used to bring a candidate's lifted coordinate
/// into `(-pivot, pivot)`.
struct PivotPair<'a> {
    pivot: &'a BigInt,
    up: &'a SignedElement,
}

impl PivotPair<'_> {
    /// Everything reachable from `c` by adding pivot elements of opposite
    /// sign, restricted to `|last| < pivot`: the residue `r` and `r - p`
    /// (just `0` when `p` divides the lifted coordinate).
    fn closure(&self, c: &SignedElement, out: &mut Vec<SignedElement>) {
        let (q, r) = c.last().div_mod_floor(self.pivot);
        let base = if q.is_zero() {
            c.clone()
        } else {
            c.sub_scaled(&q, self.up)
        };
        if !r.is_zero() {
            out.push(base.sub_scaled(&BigInt::from(1), self.up));
        }
        out.push(base);
    }
}

/// Indices of accepted elements that may divide a candidate, split by the
/// sign of the lifted coordinate. Level-zero elements are left out: with
/// `|z'| < pivot` they never divide a candidate.
#[derive(Default)]
struct DivisorIndex {
    positive: Vec<SignedElement>,
    negative: Vec<SignedElement>,
    zero: Vec<SignedElement>,
}

impl DivisorIndex {
    fn push(&mut self, e: SignedElement) {
        if e.last().is_positive() {
            self.positive.push(e);
        } else if e.last().is_negative() {
            self.negative.push(e);
        } else {
            self.zero.push(e);
        }
    }

    fn reduces(&self, z: &SignedElement) -> bool {
        let same_sign: &[SignedElement] = if z.last().is_positive() {
            &self.positive
        } else if z.last().is_negative() {
            &self.negative
        } else {
            &[]
        };
        self.zero.iter().chain(same_sign).any(|g| g.divides(z))
    }
}

/// Computes exactly the minimal elements of `K⁺ ∪ K⁻` for one lift step
/// (restricted to `bounds` on the prefix).
///
/// `pivot` is the diagonal entry of the generator being lifted when the
/// projection is not injective yet, `None` afterwards. `input` must contain
/// the level-zero pair in the former case.
pub fn graded_step_hb(
    input: &[SignedElement],
    pivot: Option<&BigInt>,
    bounds: &Bounds,
    pool: Option<&ThreadPool>,
) -> Result<GradedSet> {
    let mut out = GradedSet::default();
    let mut index = DivisorIndex::default();

    let pair = match pivot {
        Some(p) => {
            let up = input
                .iter()
                .find(|f| f.level().is_zero() && f.last() == p)
                .ok_or_else(|| Error::Argument("input lacks the level-zero pivot element".into()))?;
            Some(PivotPair { pivot: p, up })
        }
        None => None,
    };

    let mut input_levels: BTreeMap<u64, Vec<&SignedElement>> = BTreeMap::new();
    for f in input {
        if !prefix_admitted(bounds, f.prefix()) {
            continue;
        }
        let level = level_of(f)?;
        if level == 0 {
            if pair.is_some() && !out.bucket(0).contains(f) {
                out.insert(0, f.clone());
            }
        } else {
            input_levels.entry(level).or_default().push(f);
        }
    }
    let max_input = input_levels.keys().next_back().copied().unwrap_or(0);

    let mut level: u64 = 1;
    loop {
        let mut raw: Vec<SignedElement> = input_levels
            .get(&level)
            .map(|fs| fs.iter().map(|&f| f.clone()).collect())
            .unwrap_or_default();

        let splits: Vec<(u64, u64)> = out
            .buckets
            .keys()
            .copied()
            .filter(|&a| a >= 1 && 2 * a <= level)
            .filter(|&a| out.buckets.contains_key(&(level - a)))
            .map(|a| (a, level - a))
            .collect();
        let sums = |&(a, b): &(u64, u64)| -> Vec<SignedElement> {
            let (xs, ys) = (out.bucket(a), out.bucket(b));
            let mut found = Vec::new();
            for (i, x) in xs.iter().enumerate() {
                let start = if a == b { i + 1 } else { 0 };
                for y in &ys[start..] {
                    found.extend(s_vector_hb(x, y, bounds));
                }
            }
            found
        };
        match pool {
            Some(pool) => raw.extend(pool.install(|| splits.par_iter().flat_map_iter(sums).collect::<Vec<_>>())),
            None => raw.extend(splits.iter().flat_map(sums)),
        }

        let mut candidates = match &pair {
            Some(pair) => {
                let mut closed = Vec::with_capacity(2 * raw.len());
                for c in &raw {
                    pair.closure(c, &mut closed);
                }
                closed
            }
            None => raw,
        };
        candidates.sort_by(SignedElement::processing_cmp);
        candidates.dedup();

        let reducible: Vec<bool> = match pool {
            Some(pool) => pool.install(|| candidates.par_iter().map(|z| index.reduces(z)).collect()),
            None => candidates.iter().map(|z| index.reduces(z)).collect(),
        };
        let mut accepted: Vec<SignedElement> = Vec::new();
        for (z, red) in candidates.into_iter().zip(reducible) {
            if red || z.is_zero() || accepted.iter().any(|g| g.divides(&z)) {
                continue;
            }
            accepted.push(z);
        }
        if !accepted.is_empty() {
            debug!("level {level}: {} new minimal elements", accepted.len());
            for z in &accepted {
                index.push(z.clone());
            }
            out.buckets.insert(level, accepted);
        }

        let k = out.max_nonempty().unwrap_or(0).max(max_input).max(1);
        if level >= 2 * k {
            out.stop_level = k;
            return Ok(out);
        }
        level += 1;
    }
}
