//! Integer partitions and the counting functions used by the identity checks.
//!
//! A [`Partition`] stores only its positive parts in weakly decreasing order.
//! Indexing past the last part yields 0, matching the trailing-zero
//! convention of the wall algorithms.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected as non-monotone.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts and strips zeros. Used for multiset-style constructions.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Zero-based part access with implicit trailing zeros.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when all positive parts are distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Comma-separated literal, e.g. `5,3,3,2`; the empty partition is `""`.
    pub fn to_literal(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_literal())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| match tok.trim().parse::<usize>() {
                Ok(p) if p > 0 => Ok(p),
                _ => Err(Error::BadLiteral(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Depth-first generator of partitions of `m` in descending lexicographic
/// order. `admit(prefix, next)` decides whether `next` may follow `prefix`
/// (it is only offered values `<=` the last part); `finish(parts)` is the
/// final check on a complete partition.
pub(crate) fn backtrack<A, F>(m: usize, admit: A, finish: F) -> Vec<Partition>
where
    A: Fn(&[usize], usize) -> bool,
    F: Fn(&[usize]) -> bool,
{
    fn go<A, F>(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>, admit: &A, finish: &F)
    where
        A: Fn(&[usize], usize) -> bool,
        F: Fn(&[usize]) -> bool,
    {
        if rem == 0 {
            if finish(cur) {
                out.push(Partition::from_sorted_unchecked(cur.clone()));
            }
            return;
        }
        let top = cur.last().map_or(rem, |&last| last.min(rem));
        for next in (1..=top).rev() {
            if !admit(cur, next) {
                continue;
            }
            cur.push(next);
            go(rem - next, cur, out, admit, finish);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut out, &admit, &finish);
    out
}

/// All partitions of `m`, descending lexicographic.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    backtrack(m, |_, _| true, |_| true)
}

/// All strict partitions of `m`, descending lexicographic.
pub fn enumerate_strict(m: usize) -> Vec<Partition> {
    let used = |prefix: &[usize]| prefix.iter().sum::<usize>();
    backtrack(
        m,
        |prefix, next| {
            if prefix.last() == Some(&next) {
                return false;
            }
            // 1 + 2 + ... + next is the most that parts <= next can still hold
            let rem = m - used(prefix);
            rem <= next * (next + 1) / 2
        },
        |_| true,
    )
}

fn checked_add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// p(m) by the unbounded coin-change recurrence over part sizes.
pub fn count_partitions(m: usize) -> Result<u128> {
    let mut table = vec![0u128; m + 1];
    table[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            table[total] = checked_add(table[total], table[total - part], "count_partitions")?;
        }
    }
    Ok(table[m])
}

/// Number of partitions of `m` into distinct parts (0/1 knapsack).
pub fn count_strict(m: usize) -> Result<u128> {
    let mut table = vec![0u128; m + 1];
    table[0] = 1;
    for part in 1..=m {
        for total in (part..=m).rev() {
            table[total] = checked_add(table[total], table[total - part], "count_strict")?;
        }
    }
    Ok(table[m])
}

/// Number of partitions of `m` into odd parts.
pub fn count_odd(m: usize) -> Result<u128> {
    let mut table = vec![0u128; m + 1];
    table[0] = 1;
    for part in (1..=m).step_by(2) {
        for total in part..=m {
            table[total] = checked_add(table[total], table[total - part], "count_odd")?;
        }
    }
    Ok(table[m])
}
