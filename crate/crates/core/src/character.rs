//! Virtual characters `vch_n(A) = Σ_μ |A[μ]| e(μ)` and the principally
//! specialized character of the basic module.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::partition::Partition;
use crate::series::PowerSeries;
use crate::wall::{enumerate_reduced, weight, WallParams, WeightVector};

/// Multiset of weights, keyed by `(a_0, ..., a_n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualCharacter {
    terms: BTreeMap<WeightVector, u64>,
}

impl VirtualCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: WeightVector) {
        *self.terms.entry(w).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms in ascending order of weight vector.
    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, u64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn distinct_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<WeightVector> for VirtualCharacter {
    fn from_iter<I: IntoIterator<Item = WeightVector>>(iter: I) -> Self {
        let mut vch = VirtualCharacter::new();
        for w in iter {
            vch.add(w);
        }
        vch
    }
}

#[derive(Serialize)]
struct Term<'a> {
    weight: &'a WeightVector,
    multiplicity: u64,
}

/// Serialized as `[{"weight": [..], "multiplicity": c}, ...]` in key order.
impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (weight, &multiplicity) in &self.terms {
            seq.serialize_element(&Term {
                weight,
                multiplicity,
            })?;
        }
        seq.end()
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .terms
            .iter()
            .map(|(w, c)| format!("{w}:{c}"))
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "{{{body}}}")
    }
}

pub fn virtual_character<'a, I>(set: I, params: WallParams) -> VirtualCharacter
where
    I: IntoIterator<Item = &'a Partition>,
{
    set.into_iter()
        .map(|lambda| weight(lambda, params))
        .collect()
}

/// `Σ_{m<=M} |K_n[m]| t^m`, counted by enumerating reduced walls.
pub fn principal_character(params: WallParams, max_degree: usize) -> PowerSeries {
    let coeffs = (0..=max_degree)
        .map(|m| enumerate_reduced(params, m).len() as i128)
        .collect();
    PowerSeries::from_coeffs(max_degree, coeffs)
}
