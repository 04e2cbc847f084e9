//! Exhaustive checkers for the counting and character identities.
//!
//! Each checker walks `m = 0..=M` in order and stops at the first failing
//! cell. Within a cell every object is checked and the lexicographically
//! smallest offender is reported. No checker uses the identity it tests as
//! a shortcut: wall counts always come from enumeration.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bijection::{phi, phi_inv, psi, psi_inv, MapResult};
use crate::character::virtual_character;
use crate::error::Result;
use crate::partition::{
    count_odd, count_partitions, count_strict, enumerate_partitions, enumerate_strict, Partition,
};
use crate::series::{series_product_odd, series_product_strict};
use crate::wall::{
    enumerate_proper, enumerate_reduced, has_removable_delta, is_reduced, weight, WallParams,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: Option<usize>,
    pub m: usize,
    pub objects: Vec<Partition>,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub n: Option<usize>,
    /// Largest block count (or series degree) examined.
    pub max_m: usize,
    pub passed: bool,
    /// Number of elementary comparisons performed.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    /// Wall-clock time; kept out of serialized payloads.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Failure inside one cell: offending objects plus an explanation.
type CellFailure = (Vec<Partition>, String);

/// Per-cell bookkeeping that keeps the smallest offender seen.
#[derive(Default)]
struct Cell {
    checked: u64,
    worst: Option<CellFailure>,
}

impl Cell {
    fn check(
        &mut self,
        ok: bool,
        objects: impl FnOnce() -> Vec<Partition>,
        message: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if ok {
            return;
        }
        let objects = objects();
        if self.worst.as_ref().is_none_or(|(prev, _)| objects < *prev) {
            self.worst = Some((objects, message()));
        }
    }

    fn fail(&mut self, objects: Vec<Partition>, message: String) {
        self.check(false, || objects, || message);
    }

    fn finish(self) -> std::result::Result<u64, CellFailure> {
        match self.worst {
            None => Ok(self.checked),
            Some(f) => Err(f),
        }
    }
}

fn run<F>(check: &str, n: Option<usize>, max_m: usize, mut cell: F) -> VerificationReport
where
    F: FnMut(usize) -> std::result::Result<u64, CellFailure>,
{
    let start = Instant::now();
    let mut checked = 0;
    let mut counterexample = None;
    for m in 0..=max_m {
        match cell(m) {
            Ok(c) => checked += c,
            Err((objects, message)) => {
                counterexample = Some(Counterexample {
                    n,
                    m,
                    objects,
                    message,
                });
                break;
            }
        }
    }
    VerificationReport {
        check: check.to_string(),
        n,
        max_m,
        passed: counterexample.is_none(),
        checked,
        counterexample,
        elapsed: start.elapsed(),
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, CellFailure> {
    r.map_err(|e| (vec![], e.to_string()))
}

/// Euler's identity up to degree `M`: both products agree with each other
/// and with the strict/odd DP counts.
pub fn verify_euler(max_degree: usize) -> VerificationReport {
    let products = series_product_strict(max_degree)
        .and_then(|s| series_product_odd(max_degree).map(|o| (s, o)));
    run("euler", None, max_degree, |m| {
        let (strict, odd) = products.as_ref().map_err(|e| (vec![], e.to_string()))?;
        let strict_count = lift(count_strict(m))? as i128;
        let odd_count = lift(count_odd(m))? as i128;
        let row = [strict.coeff(m), odd.coeff(m), strict_count, odd_count];
        if row.iter().all(|&c| c == row[0]) {
            Ok(1)
        } else {
            Err((
                vec![],
                format!(
                    "degree {m}: strict product {}, odd product {}, strict count {}, odd count {}",
                    row[0], row[1], row[2], row[3]
                ),
            ))
        }
    })
}

/// `|K_n[m]| = |S[m]| = count_strict(m)` for every `m <= M`.
pub fn verify_count_identity(params: WallParams, max_m: usize) -> VerificationReport {
    run("count", Some(params.n()), max_m, |m| {
        let reduced = enumerate_reduced(params, m).len() as u128;
        let strict = enumerate_strict(m).len() as u128;
        let dp = lift(count_strict(m))?;
        if reduced == strict && strict == dp {
            Ok(1)
        } else {
            Err((
                vec![],
                format!("|K_n[{m}]| = {reduced}, |S[{m}]| = {strict}, DP = {dp}"),
            ))
        }
    })
}

/// `|F_n[m]| = Σ_k |K_n[m - 2kΔ]| P(k)`, both sides enumerated.
pub fn verify_fock(params: WallParams, max_m: usize) -> VerificationReport {
    let period = params.period();
    run("fock", Some(params.n()), max_m, |m| {
        let lhs = enumerate_proper(params, m).len() as u128;
        let mut rhs = 0u128;
        for k in 0..=m / period {
            let reduced = enumerate_reduced(params, m - k * period).len() as u128;
            rhs += reduced * lift(count_partitions(k))?;
        }
        if lhs == rhs {
            Ok(1)
        } else {
            Err((
                vec![],
                format!("|F_n[{m}]| = {lhs} but the Fock sum is {rhs}"),
            ))
        }
    })
}

/// `vch_n(S[m]) = vch_n(K_n[m])` as exact multisets.
pub fn verify_vch_identity(params: WallParams, max_m: usize) -> VerificationReport {
    run("vch", Some(params.n()), max_m, |m| {
        let strict = enumerate_strict(m);
        let reduced = enumerate_reduced(params, m);
        let lhs = virtual_character(&strict, params);
        let rhs = virtual_character(&reduced, params);
        if lhs == rhs {
            return Ok(1);
        }
        // witness: smallest strict partition whose weight is over-represented
        let witness = strict
            .iter()
            .filter(|s| {
                let w = weight(s, params);
                lhs.multiplicity(&w) != rhs.multiplicity(&w)
            })
            .min()
            .cloned()
            .into_iter()
            .collect();
        Err((
            witness,
            format!("vch(S[{m}]) = {lhs} but vch(K_n[{m}]) = {rhs}"),
        ))
    })
}

/// Every proper wall: reduced iff it has no removable δ.
pub fn verify_reduced_equivalence(params: WallParams, max_m: usize) -> VerificationReport {
    run("reduced-equivalence", Some(params.n()), max_m, |m| {
        let mut cell = Cell::default();
        for lambda in enumerate_proper(params, m) {
            match has_removable_delta(&lambda, params) {
                Ok(removable) => {
                    let reduced = is_reduced(&lambda, params);
                    cell.check(
                        reduced != removable,
                        || vec![lambda.clone()],
                        || format!("{lambda}: is_reduced = {reduced}, removable δ = {removable}"),
                    );
                }
                Err(e) => cell.fail(vec![lambda.clone()], e.to_string()),
            }
        }
        cell.finish()
    })
}

fn weight_shift_holds(lambda: &Partition, result: &MapResult, params: WallParams) -> bool {
    let shift = 2 * result.k as u64;
    weight(lambda, params)
        .counts()
        .iter()
        .zip(weight(&result.reduced, params).counts())
        .all(|(a, b)| a.checked_sub(*b) == Some(shift))
}

type ForwardMap = fn(&Partition, WallParams) -> Result<MapResult>;
type InverseMap = fn(&Partition, &Partition, WallParams) -> Result<Partition>;

struct MapSpec {
    name: &'static str,
    forward: ForwardMap,
    inverse: InverseMap,
    in_domain: fn(&Partition, WallParams) -> bool,
    in_target: fn(&Partition, WallParams) -> bool,
    target_set: fn(WallParams, usize) -> Vec<Partition>,
}

fn check_map(spec: &MapSpec, params: WallParams, m: usize, cell: &mut Cell) {
    let period = params.period();
    let mut domain_size = 0u64;
    for lambda in enumerate_proper(params, m) {
        if !(spec.in_domain)(&lambda, params) {
            continue;
        }
        domain_size += 1;
        let r = match (spec.forward)(&lambda, params) {
            Ok(r) => r,
            Err(e) => {
                cell.fail(vec![lambda.clone()], format!("{}: {e}", spec.name));
                continue;
            }
        };
        let shape_ok = r.k >= 1
            && r.hat.size() == r.k
            && (spec.in_target)(&r.reduced, params)
            && r.reduced.size() + r.k * period == m;
        cell.check(
            shape_ok,
            || vec![lambda.clone()],
            || {
                format!(
                    "{}({lambda}) = ({}, {}) has the wrong shape",
                    spec.name, r.reduced, r.hat
                )
            },
        );
        cell.check(
            weight_shift_holds(&lambda, &r, params),
            || vec![lambda.clone()],
            || {
                format!(
                    "{}({lambda}): weights do not drop by 2k = {}",
                    spec.name,
                    2 * r.k
                )
            },
        );
        let back = (spec.inverse)(&r.reduced, &r.hat, params);
        cell.check(
            back.as_ref() == Ok(&lambda),
            || vec![lambda.clone()],
            || {
                format!(
                    "{}_inv({}, {}) = {back:?}, expected {lambda}",
                    spec.name, r.reduced, r.hat
                )
            },
        );
    }

    let mut codomain_size = 0u64;
    for k in 1..=m / period {
        let hats = enumerate_partitions(k);
        for base in (spec.target_set)(params, m - k * period) {
            for hat in &hats {
                codomain_size += 1;
                let image = (spec.inverse)(&base, hat, params);
                let ok = match &image {
                    Ok(lambda) => (spec.forward)(lambda, params)
                        .map(|r| r.reduced == base && r.hat == *hat)
                        .unwrap_or(false),
                    Err(_) => false,
                };
                cell.check(
                    ok,
                    || vec![base.clone(), hat.clone()],
                    || {
                        format!(
                            "{} does not invert {}_inv({base}, {hat}) = {image:?}",
                            spec.name, spec.name
                        )
                    },
                );
            }
        }
    }
    cell.check(domain_size == codomain_size, Vec::new, || {
        format!(
            "{}: domain has {domain_size} walls, codomain has {codomain_size} pairs",
            spec.name
        )
    });
}

/// ψ and φ are total on their domains, round-trip with their inverses in
/// both directions, match domain and codomain sizes, and lower every color
/// count by exactly `2k`.
pub fn verify_bijections(params: WallParams, max_m: usize) -> VerificationReport {
    let specs = [
        MapSpec {
            name: "psi",
            forward: psi,
            inverse: psi_inv,
            in_domain: |l, p| !is_reduced(l, p),
            in_target: is_reduced,
            target_set: enumerate_reduced,
        },
        MapSpec {
            name: "phi",
            forward: phi,
            inverse: phi_inv,
            in_domain: |l, _| !l.is_strict(),
            in_target: |l, _| l.is_strict(),
            target_set: |_, m| enumerate_strict(m),
        },
    ];
    run("bijections", Some(params.n()), max_m, |m| {
        let mut cell = Cell::default();
        for spec in &specs {
            check_map(spec, params, m, &mut cell);
        }
        cell.finish()
    })
}
