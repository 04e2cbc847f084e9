//! Young walls of type D_{n+1}^(2) built on the ground-state wall of Λ0.
//!
//! A wall is stored as the partition of its column block counts, read from
//! right to left. Blocks in every column follow the color pattern
//!
//! ```text
//! 0, 1, ..., n-1, n, n, n-1, ..., 1, 0   (period 2Δ, Δ = n + 1)
//! ```
//!
//! Colors 0 and n are half-height blocks, the rest unit blocks. With the
//! half-height ground block included, a column holding `k` blocks ends at an
//! integer height exactly when Δ does not divide `k`: the half blocks of a
//! period sit at positions 1, Δ, Δ+1 and 2Δ, so the running count of half
//! blocks (ground included) is odd exactly at multiples of Δ.
//! Properness ("no two full columns share a height") therefore reduces to:
//! equal adjacent parts are multiples of Δ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{backtrack, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WallParams {
    n: usize,
    delta: usize,
}

impl WallParams {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(WallParams { n, delta: n + 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Δ = n + 1.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of blocks in a δ-column, 2Δ.
    pub fn period(&self) -> usize {
        2 * self.delta
    }

    pub fn colors(&self) -> usize {
        self.n + 1
    }
}

/// Block counts `(a_0, ..., a_n)` per color; denotes the weight
/// `Λ0 - Σ a_i α_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn zero(params: WallParams) -> Self {
        WeightVector(vec![0; params.colors()])
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        WeightVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Height of `Λ0 - μ`, i.e. the total number of blocks.
    pub fn height(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .0
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "[{body}]")
    }
}

/// Color of the `k`-th block (1-based) of any column.
pub fn block_color(k: usize, params: WallParams) -> usize {
    assert!(k >= 1, "block positions are 1-based");
    let r = (k - 1) % params.period();
    if r <= params.n {
        r
    } else {
        2 * params.n + 1 - r
    }
}

/// Whether a column with `k` blocks above the ground state has integer height.
pub fn is_full_column(k: usize, params: WallParams) -> bool {
    !k.is_multiple_of(params.delta)
}

pub fn is_proper(lambda: &Partition, params: WallParams) -> bool {
    lambda
        .parts()
        .windows(2)
        .all(|w| w[0] != w[1] || w[0] % params.delta == 0)
}

fn gap_is_reduced(upper: usize, lower: usize, params: WallParams) -> bool {
    let gap = upper - lower;
    gap < params.period() || (gap == params.period() && !upper.is_multiple_of(params.delta))
}

/// Proper, and every gap `λ_i - λ_{i+1}` (trailing zero included) is below 2Δ,
/// or exactly 2Δ with Δ not dividing `λ_i`.
pub fn is_reduced(lambda: &Partition, params: WallParams) -> bool {
    is_proper(lambda, params)
        && (0..lambda.len()).all(|i| gap_is_reduced(lambda[i], lambda[i + 1], params))
}

/// Whether one δ-column can be pulled out of some column leaving a proper
/// wall. Rejects improper input.
pub fn has_removable_delta(lambda: &Partition, params: WallParams) -> Result<bool> {
    if !is_proper(lambda, params) {
        return Err(Error::NotProper(lambda.clone()));
    }
    let period = params.period();
    Ok((0..lambda.len()).any(|i| {
        let h = lambda[i];
        if h < period || h - period < lambda[i + 1] {
            return false;
        }
        let mut parts = lambda.parts().to_vec();
        parts[i] -= period;
        let shrunk = Partition::from_unsorted(parts);
        is_proper(&shrunk, params)
    }))
}

/// F_n[m]: proper walls with `m` blocks, descending lexicographic.
pub fn enumerate_proper(params: WallParams, m: usize) -> Vec<Partition> {
    backtrack(
        m,
        |prefix, next| prefix.last() != Some(&next) || next % params.delta == 0,
        |_| true,
    )
}

/// K_n[m]: reduced walls with `m` blocks, descending lexicographic.
pub fn enumerate_reduced(params: WallParams, m: usize) -> Vec<Partition> {
    backtrack(
        m,
        |prefix, next| match prefix.last() {
            None => true,
            Some(&last) => {
                (last != next || next % params.delta == 0) && gap_is_reduced(last, next, params)
            }
        },
        // the last column is compared against the empty column to its left
        |parts| {
            parts
                .last()
                .is_none_or(|&last| gap_is_reduced(last, 0, params))
        },
    )
}

/// Per-color block counts of the wall `λ`. Accepts any partition.
pub fn weight(lambda: &Partition, params: WallParams) -> WeightVector {
    let period = params.period();
    let mut counts = vec![0u64; params.colors()];
    for &h in lambda.parts() {
        let full_periods = (h / period) as u64;
        if full_periods > 0 {
            for c in counts.iter_mut() {
                *c += 2 * full_periods;
            }
        }
        for k in 1..=h % period {
            counts[block_color(k, params)] += 1;
        }
    }
    WeightVector(counts)
}
