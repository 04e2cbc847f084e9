//! The two stripping maps behind `|K_n[m]| = |S[m]|`.
//!
//! * [`psi`] takes a proper, non-reduced wall to a reduced wall `λ̄` plus a
//!   partition `λ̂` of `k`, by repeatedly lowering a prefix of columns by a
//!   multiple of 2Δ.
//! * [`phi`] takes a proper, non-strict wall to a strict partition `λ̄` plus a
//!   partition `λ̂` of `k`, by deleting equal pairs of columns of height `jΔ`.
//!
//! In both cases `|λ| = |λ̄| + 2kΔ`, and [`psi_inv`] / [`phi_inv`] rebuild `λ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::wall::{is_proper, is_reduced, WallParams};

/// What one iteration of a map did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepKind {
    /// Parts `1..index` were lowered by `2 * t * Δ`.
    Subtract { t: usize },
    /// Two columns of height `multiple * Δ` ending at `index` were deleted.
    RemovePair { multiple: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Iteration counter `l`, from 0.
    pub iteration: usize,
    /// 1-based index `i` of the lower column of the pair being compared.
    pub index: usize,
    #[serde(flatten)]
    pub kind: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapResult {
    /// `λ̄`, reduced for ψ and strict for φ.
    pub reduced: Partition,
    /// `λ̂ ⊢ k`.
    pub hat: Partition,
    pub k: usize,
    pub trace: Vec<TraceStep>,
}

impl MapResult {
    /// The pair `(λ̄, λ̂)`, ignoring the trace.
    pub fn pair(&self) -> (&Partition, &Partition) {
        (&self.reduced, &self.hat)
    }
}

/// `(kΔ)^j ↪ λ`: insert `j` copies of `kΔ` after every part `>= kΔ`.
pub fn insert_blocks(lambda: &Partition, k: usize, j: usize, params: WallParams) -> Partition {
    assert!(k >= 1, "insert_blocks needs a positive multiple");
    let value = k * params.delta();
    let at = lambda.parts().partition_point(|&p| p >= value);
    let mut parts = Vec::with_capacity(lambda.len() + j);
    parts.extend_from_slice(&lambda.parts()[..at]);
    parts.extend(std::iter::repeat_n(value, j));
    parts.extend_from_slice(&lambda.parts()[at..]);
    Partition::from_sorted_unchecked(parts)
}

/// Largest `t >= 1` with `upper - lower >= 2tΔ`, equality only allowed when
/// Δ divides `upper`.
fn strip_multiplier(upper: usize, lower: usize, params: WallParams) -> Option<usize> {
    let gap = upper - lower;
    let period = params.period();
    let mut t = gap / period;
    if gap.is_multiple_of(period) && !upper.is_multiple_of(params.delta()) {
        t = t.saturating_sub(1);
    }
    (t >= 1).then_some(t)
}

/// Algorithm A. Domain: proper walls that are not reduced.
pub fn psi(lambda: &Partition, params: WallParams) -> Result<MapResult> {
    if !is_proper(lambda, params) {
        return Err(Error::NotProper(lambda.clone()));
    }
    if is_reduced(lambda, params) {
        return Err(Error::AlreadyReduced(lambda.clone()));
    }

    // parts plus the trailing zero the last column is compared with
    let len = lambda.len();
    let mut cur: Vec<usize> = lambda.parts().to_vec();
    cur.push(0);
    let mut trace = Vec::new();

    loop {
        // maximal 1-based i in 2..=len+1, i.e. zero-based lower index j = i-1
        let hit = (1..=len)
            .rev()
            .find_map(|j| strip_multiplier(cur[j - 1], cur[j], params).map(|t| (j, t)));
        let Some((j, t)) = hit else { break };
        let drop = 2 * t * params.delta();
        for part in &mut cur[..j] {
            *part -= drop;
        }
        trace.push(TraceStep {
            iteration: trace.len(),
            index: j + 1,
            kind: StepKind::Subtract { t },
        });
    }
    cur.pop();

    let period = params.period();
    let hat_parts: Vec<usize> = lambda
        .parts()
        .iter()
        .zip(&cur)
        .map(|(orig, now)| (orig - now) / period)
        .collect();
    let reduced = Partition::new(cur)
        .map_err(|e| Error::Invariant(format!("psi produced a non-partition: {e}")))?;
    let hat = Partition::new(hat_parts)
        .map_err(|e| Error::Invariant(format!("psi hat is not a partition: {e}")))?;
    let k = hat.size();

    if !is_reduced(&reduced, params) {
        return Err(Error::Invariant(format!(
            "psi({lambda}) = {reduced} is not reduced"
        )));
    }
    if k == 0 || lambda.size() != reduced.size() + k * period {
        return Err(Error::Invariant(format!("psi({lambda}): bad k = {k}")));
    }
    Ok(MapResult {
        reduced,
        hat,
        k,
        trace,
    })
}

/// Inverse of [`psi`]: `λ_i = λ̄_i + 2 λ̂_i Δ`.
pub fn psi_inv(reduced: &Partition, hat: &Partition, params: WallParams) -> Result<Partition> {
    if !is_reduced(reduced, params) {
        return Err(Error::NotReduced(reduced.clone()));
    }
    if hat.is_empty() {
        return Err(Error::EmptyHat);
    }
    let period = params.period();
    let len = reduced.len().max(hat.len());
    let parts = (0..len).map(|i| reduced[i] + period * hat[i]).collect();
    // sum of two weakly decreasing sequences is weakly decreasing
    let lambda = Partition::from_sorted_unchecked(parts);
    if !is_proper(&lambda, params) || is_reduced(&lambda, params) {
        return Err(Error::Invariant(format!(
            "psi_inv({reduced}, {hat}) = {lambda} left the domain of psi"
        )));
    }
    Ok(lambda)
}

/// Algorithm B. Domain: proper walls that are not strict.
pub fn phi(lambda: &Partition, params: WallParams) -> Result<MapResult> {
    if !is_proper(lambda, params) {
        return Err(Error::NotProper(lambda.clone()));
    }
    if lambda.is_strict() {
        return Err(Error::AlreadyStrict(lambda.clone()));
    }

    let delta = params.delta();
    let mut cur: Vec<usize> = lambda.parts().to_vec();
    let mut removed = Vec::new();
    let mut trace = Vec::new();

    // zero-based j is the lower member of the pair (1-based i = j + 1)
    while let Some(j) = (1..cur.len()).rev().find(|&j| cur[j - 1] == cur[j]) {
        let value = cur[j];
        if !value.is_multiple_of(delta) {
            return Err(Error::Invariant(format!(
                "phi({lambda}): equal pair {value} is not a multiple of Δ"
            )));
        }
        let multiple = value / delta;
        cur.drain(j - 1..=j);
        removed.push(multiple);
        trace.push(TraceStep {
            iteration: trace.len(),
            index: j + 1,
            kind: StepKind::RemovePair { multiple },
        });
    }

    removed.reverse();
    let hat = Partition::new(removed.clone()).map_err(|_| {
        Error::Invariant(format!(
            "phi({lambda}): removed multiples {removed:?} not decreasing"
        ))
    })?;
    let reduced = Partition::from_sorted_unchecked(cur);
    let k = hat.size();
    if lambda.size() != reduced.size() + k * params.period() {
        return Err(Error::Invariant(format!("phi({lambda}): bad k = {k}")));
    }
    Ok(MapResult {
        reduced,
        hat,
        k,
        trace,
    })
}

/// Inverse of [`phi`]: insert the pair `(λ̂_j Δ)^2` for every part of `λ̂`,
/// smallest first.
pub fn phi_inv(strict: &Partition, hat: &Partition, params: WallParams) -> Result<Partition> {
    if !strict.is_strict() {
        return Err(Error::NotStrict(strict.clone()));
    }
    if hat.is_empty() {
        return Err(Error::EmptyHat);
    }
    Ok(hat.parts().iter().rev().fold(strict.clone(), |acc, &part| {
        insert_blocks(&acc, part, 2, params)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, enumerate_strict};
    use crate::wall::{enumerate_proper, enumerate_reduced, weight};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn wp(n: usize) -> WallParams {
        WallParams::new(n).unwrap()
    }

    #[test]
    fn insertion() {
        assert_eq!(insert_blocks(&p(&[7, 1]), 2, 1, wp(2)), p(&[7, 6, 1]));
        assert_eq!(insert_blocks(&p(&[1]), 1, 2, wp(2)), p(&[3, 3, 1]));
        assert_eq!(insert_blocks(&p(&[5, 3]), 1, 0, wp(2)), p(&[5, 3]));
        assert_eq!(insert_blocks(&p(&[3]), 1, 2, wp(2)), p(&[3, 3, 3]));
    }

    #[test]
    fn psi_examples() {
        let r = psi(&p(&[7]), wp(2)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (p(&[1]), p(&[1]), 1));
        assert_eq!(
            r.trace,
            vec![TraceStep {
                iteration: 0,
                index: 2,
                kind: StepKind::Subtract { t: 1 }
            }]
        );

        let r = psi(&p(&[6, 6]), wp(2)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (Partition::empty(), p(&[1, 1]), 2));
        assert_eq!(r.trace[0].index, 3);

        let r = psi(&p(&[14, 1]), wp(2)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (p(&[2, 1]), p(&[2]), 2));
        assert_eq!(r.trace[0].kind, StepKind::Subtract { t: 2 });
    }

    #[test]
    fn psi_domain_guards() {
        assert_eq!(
            psi(&p(&[5, 1]), wp(2)),
            Err(Error::AlreadyReduced(p(&[5, 1])))
        );
        assert_eq!(psi(&p(&[2, 2]), wp(2)), Err(Error::NotProper(p(&[2, 2]))));
    }

    #[test]
    fn psi_inv_examples() {
        assert_eq!(psi_inv(&p(&[1]), &p(&[1]), wp(2)).unwrap(), p(&[7]));
        assert_eq!(
            psi_inv(&Partition::empty(), &p(&[1, 1]), wp(2)).unwrap(),
            p(&[6, 6])
        );
        assert_eq!(psi_inv(&p(&[2, 1]), &p(&[2]), wp(2)).unwrap(), p(&[14, 1]));
        assert_eq!(
            psi_inv(&p(&[7]), &p(&[1]), wp(2)),
            Err(Error::NotReduced(p(&[7])))
        );
        assert_eq!(
            psi_inv(&p(&[1]), &Partition::empty(), wp(2)),
            Err(Error::EmptyHat)
        );
    }

    #[test]
    fn phi_examples() {
        let r = phi(&p(&[3, 3, 1]), wp(2)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (p(&[1]), p(&[1]), 1));

        let r = phi(&p(&[6, 6, 3, 3]), wp(2)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (Partition::empty(), p(&[2, 1]), 3));
        let removed: Vec<_> = r.trace.iter().map(|s| s.kind.clone()).collect();
        assert_eq!(
            removed,
            vec![
                StepKind::RemovePair { multiple: 1 },
                StepKind::RemovePair { multiple: 2 }
            ]
        );

        let r = phi(&p(&[4, 4]), wp(3)).unwrap();
        assert_eq!((r.reduced, r.hat, r.k), (Partition::empty(), p(&[1]), 1));
    }

    #[test]
    fn phi_domain_guards() {
        assert_eq!(
            phi(&p(&[5, 2]), wp(2)),
            Err(Error::AlreadyStrict(p(&[5, 2])))
        );
        assert_eq!(phi(&p(&[2, 2]), wp(2)), Err(Error::NotProper(p(&[2, 2]))));
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(phi_inv(&p(&[1]), &p(&[1]), wp(2)).unwrap(), p(&[3, 3, 1]));
        assert_eq!(
            phi_inv(&Partition::empty(), &p(&[2, 1]), wp(2)).unwrap(),
            p(&[6, 6, 3, 3])
        );
        assert_eq!(
            phi_inv(&p(&[5, 2]), &p(&[1]), wp(2)).unwrap(),
            p(&[5, 3, 3, 2])
        );
        assert_eq!(
            phi_inv(&p(&[3, 3]), &p(&[1]), wp(2)),
            Err(Error::NotStrict(p(&[3, 3])))
        );
    }

    fn color_drop(lambda: &Partition, reduced: &Partition, params: WallParams) -> Vec<i64> {
        let before = weight(lambda, params);
        let after = weight(reduced, params);
        before
            .counts()
            .iter()
            .zip(after.counts())
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect()
    }

    #[test]
    fn round_trips_and_weight_shift() {
        for n in 2..=3 {
            let params = wp(n);
            let period = params.period();
            for m in 0..=24 {
                for lambda in enumerate_proper(params, m) {
                    if !is_reduced(&lambda, params) {
                        let r = psi(&lambda, params).unwrap();
                        assert_eq!(psi_inv(&r.reduced, &r.hat, params).unwrap(), lambda);
                        assert!(color_drop(&lambda, &r.reduced, params)
                            .iter()
                            .all(|&d| d == 2 * r.k as i64));
                    }
                    if !lambda.is_strict() {
                        let r = phi(&lambda, params).unwrap();
                        assert_eq!(phi_inv(&r.reduced, &r.hat, params).unwrap(), lambda);
                        assert!(color_drop(&lambda, &r.reduced, params)
                            .iter()
                            .all(|&d| d == 2 * r.k as i64));
                    }
                }
                for k in 1..=m / period {
                    let rest = m - k * period;
                    for hat in enumerate_partitions(k) {
                        for base in enumerate_reduced(params, rest) {
                            let lambda = psi_inv(&base, &hat, params).unwrap();
                            assert_eq!(psi(&lambda, params).unwrap().pair(), (&base, &hat));
                        }
                        for base in enumerate_strict(rest) {
                            let lambda = phi_inv(&base, &hat, params).unwrap();
                            assert_eq!(phi(&lambda, params).unwrap().pair(), (&base, &hat));
                        }
                    }
                }
            }
        }
    }
}
