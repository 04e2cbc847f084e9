use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde_json::{json, Value};

use youngwall::verify::{
    verify_bijections, verify_count_identity, verify_euler, verify_fock,
    verify_reduced_equivalence, verify_vch_identity,
};
use youngwall::{
    count_strict, enumerate_proper, enumerate_reduced, enumerate_strict, phi, phi_inv,
    principal_character, psi, psi_inv, virtual_character, weight, MapResult, Partition, StepKind,
    VerificationReport, WallParams,
};

use crate::{Alg, WallSet};

/// Bad flags, out-of-domain input or anything else that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<youngwall::Error> for UsageError {
    fn from(e: youngwall::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// Lines for stderr; never part of the payload.
    pub diagnostics: Vec<String>,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(command: &str, params: Value, payload: Value, text: String) -> Self {
        Outcome {
            json: json!({ "command": command, "params": params, "payload": payload }),
            text,
            diagnostics: Vec::new(),
            exit_code: 0,
        }
    }
}

fn params(n: usize) -> Result<WallParams, UsageError> {
    Ok(WallParams::new(n)?)
}

fn parse_partition(flag: &str, literal: &str) -> Result<Partition, UsageError> {
    literal
        .parse()
        .map_err(|e| UsageError(format!("--{flag} {literal:?}: {e}")))
}

fn set_name(set: WallSet) -> &'static str {
    match set {
        WallSet::Proper => "proper",
        WallSet::Reduced => "reduced",
        WallSet::Strict => "strict",
    }
}

fn members(set: WallSet, n: Option<usize>, m: usize) -> Result<Vec<Partition>, UsageError> {
    let need_n =
        || n.ok_or_else(|| UsageError(format!("--n is required for --set {}", set_name(set))));
    Ok(match set {
        WallSet::Proper => enumerate_proper(params(need_n()?)?, m),
        WallSet::Reduced => enumerate_reduced(params(need_n()?)?, m),
        WallSet::Strict => {
            if let Some(n) = n {
                params(n)?;
            }
            enumerate_strict(m)
        }
    })
}

pub fn cmd_enum(set: WallSet, n: Option<usize>, m: usize) -> Result<Outcome, UsageError> {
    let list = members(set, n, m)?;
    let mut text = match (set, n) {
        (WallSet::Strict, _) | (_, None) => format!("# strict m={m} count={}\n", list.len()),
        (_, Some(n)) => format!("# {} n={n} m={m} count={}\n", set_name(set), list.len()),
    };
    for lambda in &list {
        writeln!(text, "{}", lambda.to_literal()).unwrap();
    }
    Ok(Outcome::ok(
        "enum",
        json!({ "set": set_name(set), "n": n, "m": m }),
        json!({ "count": list.len(), "partitions": list }),
        text,
    ))
}

pub fn cmd_weight(n: usize, literal: &str) -> Result<Outcome, UsageError> {
    let p = params(n)?;
    let lambda = parse_partition("partition", literal)?;
    let w = weight(&lambda, p);
    let text = format!("{w} blocks={}\n", w.height());
    Ok(Outcome::ok(
        "weight",
        json!({ "n": n, "partition": lambda }),
        json!({ "weight": w, "blocks": w.height() }),
        text,
    ))
}

fn trace_lines(result: &MapResult) -> Vec<String> {
    result
        .trace
        .iter()
        .map(|step| match step.kind {
            StepKind::Subtract { t } => {
                format!("step l={} i={} subtract t={t}", step.iteration, step.index)
            }
            StepKind::RemovePair { multiple } => {
                format!(
                    "step l={} i={} remove-pair multiple={multiple}",
                    step.iteration, step.index
                )
            }
        })
        .collect()
}

pub fn cmd_map(
    alg: Alg,
    n: usize,
    literal: &str,
    hat: Option<&str>,
    trace: bool,
) -> Result<Outcome, UsageError> {
    let p = params(n)?;
    let lambda = parse_partition("partition", literal)?;
    match alg {
        Alg::Psi | Alg::Phi => {
            if hat.is_some() {
                return Err(UsageError(
                    "--hat is only used by psi-inv and phi-inv".into(),
                ));
            }
            let (name, result) = match alg {
                Alg::Psi => ("psi", psi(&lambda, p)?),
                _ => ("phi", phi(&lambda, p)?),
            };
            let mut text = String::new();
            if trace {
                for line in trace_lines(&result) {
                    writeln!(text, "{line}").unwrap();
                }
            }
            writeln!(text, "reduced: {}", result.reduced.to_literal()).unwrap();
            writeln!(text, "hat: {}", result.hat.to_literal()).unwrap();
            writeln!(text, "k: {}", result.k).unwrap();
            let mut payload = json!({
                "reduced": result.reduced,
                "hat": result.hat,
                "k": result.k,
            });
            if trace {
                payload["trace"] = json!(result.trace);
            }
            Ok(Outcome::ok(
                "map",
                json!({ "alg": name, "n": n, "partition": lambda, "trace": trace }),
                payload,
                text,
            ))
        }
        Alg::PsiInv | Alg::PhiInv => {
            let hat_literal =
                hat.ok_or_else(|| UsageError("--hat is required for psi-inv and phi-inv".into()))?;
            let hat = parse_partition("hat", hat_literal)?;
            if trace {
                return Err(UsageError("--trace applies to psi and phi only".into()));
            }
            let (name, image) = match alg {
                Alg::PsiInv => ("psi-inv", psi_inv(&lambda, &hat, p)?),
                _ => ("phi-inv", phi_inv(&lambda, &hat, p)?),
            };
            let text = format!("partition: {}\n", image.to_literal());
            Ok(Outcome::ok(
                "map",
                json!({ "alg": name, "n": n, "partition": lambda, "hat": hat }),
                json!({ "partition": image, "size": image.size() }),
                text,
            ))
        }
    }
}

pub fn cmd_vch(set: WallSet, n: usize, m: usize) -> Result<Outcome, UsageError> {
    let list = members(set, Some(n), m)?;
    let vch = virtual_character(&list, params(n)?);
    let mut text = format!(
        "# vch {} n={n} m={m} terms={} total={}\n",
        set_name(set),
        vch.distinct_terms(),
        vch.total_multiplicity()
    );
    for (w, c) in vch.terms() {
        writeln!(text, "{w} x{c}").unwrap();
    }
    Ok(Outcome::ok(
        "vch",
        json!({ "set": set_name(set), "n": n, "m": m }),
        json!({ "terms": vch, "total": vch.total_multiplicity() }),
        text,
    ))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn cmd_pschar(n: usize, degree: usize) -> Result<Outcome, UsageError> {
    let series = principal_character(params(n)?, degree);
    // i128 does not round-trip through JSON numbers; coefficients here are small counts
    let coeffs: Vec<u64> = series
        .coeffs()
        .iter()
        .map(|&c| u64::try_from(c).map_err(|_| UsageError(format!("coefficient {c} out of range"))))
        .collect::<Result<_, _>>()?;
    let text = format!("{}\n", join(&coeffs));
    Ok(Outcome::ok(
        "pschar",
        json!({ "n": n, "degree": degree }),
        json!({ "coefficients": coeffs }),
        text,
    ))
}

pub fn cmd_count(set: WallSet, n: Option<usize>, max_m: usize) -> Result<Outcome, UsageError> {
    let counts = (0..=max_m)
        .map(|m| members(set, n, m).map(|l| l.len()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    for (m, c) in counts.iter().enumerate() {
        writeln!(text, "{m} {c}").unwrap();
    }
    Ok(Outcome::ok(
        "count",
        json!({ "set": set_name(set), "n": n, "max_m": max_m }),
        json!({ "counts": counts }),
        text,
    ))
}

const ALL_CHECKS: [&str; 6] = [
    "euler",
    "count",
    "fock",
    "vch",
    "bijections",
    "reduced-equivalence",
];

fn parse_n_range(spec: &str) -> Result<Vec<usize>, UsageError> {
    let bad = || UsageError(format!("--n-range {spec:?}: expected N or A..B"));
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let n = spec.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    for n in lo..=hi {
        params(n)?;
    }
    Ok((lo..=hi).collect())
}

fn parse_checks(spec: Option<&str>) -> Result<Vec<&'static str>, UsageError> {
    let Some(spec) = spec else {
        return Ok(ALL_CHECKS.to_vec());
    };
    let mut chosen = Vec::new();
    for name in spec.split(',').map(str::trim) {
        let known = ALL_CHECKS.iter().find(|&&c| c == name).ok_or_else(|| {
            UsageError(format!(
                "unknown check {name:?}; known: {}",
                ALL_CHECKS.join(",")
            ))
        })?;
        if !chosen.contains(known) {
            chosen.push(*known);
        }
    }
    // run in canonical order whatever order the flag listed
    chosen.sort_by_key(|c| ALL_CHECKS.iter().position(|k| k == c));
    Ok(chosen)
}

fn thread_pool() -> Result<rayon::ThreadPool, UsageError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("YWALL_THREADS") {
        let threads: usize = raw
            .parse()
            .map_err(|_| UsageError(format!("YWALL_THREADS={raw:?} is not a number")))?;
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| UsageError(format!("thread pool: {e}")))
}

fn run_cell(check: &str, n: Option<usize>, max_m: usize, degree: usize) -> VerificationReport {
    let p = || WallParams::new(n.expect("rank cell")).expect("validated rank");
    match check {
        "euler" => verify_euler(degree),
        "count" => verify_count_identity(p(), max_m),
        "fock" => verify_fock(p(), max_m),
        "vch" => verify_vch_identity(p(), max_m),
        "bijections" => verify_bijections(p(), max_m),
        "reduced-equivalence" => verify_reduced_equivalence(p(), max_m),
        other => unreachable!("unknown check {other}"),
    }
}

pub fn cmd_verify(
    n_range: &str,
    max_m: usize,
    degree: usize,
    checks: Option<&str>,
) -> Result<Outcome, UsageError> {
    let ranks = parse_n_range(n_range)?;
    let checks = parse_checks(checks)?;
    // sanity guard for the strict DP used by several checks
    count_strict(max_m.max(degree))?;

    let cells: Vec<(&str, Option<usize>)> = checks
        .iter()
        .flat_map(|&check| -> Vec<(&str, Option<usize>)> {
            if check == "euler" {
                vec![(check, None)]
            } else {
                ranks.iter().map(|&n| (check, Some(n))).collect()
            }
        })
        .collect();

    let pool = thread_pool()?;
    let reports: Vec<VerificationReport> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(check, n)| run_cell(check, n, max_m, degree))
            .collect()
    });

    let mut text = String::new();
    let mut diagnostics = Vec::new();
    for r in &reports {
        let n = r.n.map_or(String::new(), |n| format!(" n={n}"));
        writeln!(
            text,
            "{} {}{n} max_m={} checked={}",
            r.status(),
            r.check,
            r.max_m,
            r.checked
        )
        .unwrap();
        if let Some(cx) = &r.counterexample {
            let objects = cx
                .objects
                .iter()
                .map(Partition::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(
                text,
                "  counterexample m={} {objects}: {}",
                cx.m, cx.message
            )
            .unwrap();
        }
        diagnostics.push(format!("{}{n}: {:.2?}", r.check, r.elapsed));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(text, "{} checks, {failed} failed", reports.len()).unwrap();

    let mut outcome = Outcome::ok(
        "verify",
        json!({ "n_range": ranks, "max_m": max_m, "degree": degree, "checks": checks }),
        json!({ "all_passed": failed == 0, "reports": reports }),
        text,
    );
    outcome.diagnostics = diagnostics;
    outcome.exit_code = if failed == 0 { 0 } else { 1 };
    Ok(outcome)
}
