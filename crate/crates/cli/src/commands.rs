use std::fs;
use std::path::Path;

use agrees::canonical::ladder_report;
use agrees::certificates::{
    build_certificate_2dim, claim_containment_by_degree, good_agg_claim_report, veronese_instance,
};
use agrees::combinatorics::{ineq_sides, sweep_inequality, SweepBounds};
use agrees::good::good_report;
use agrees::monomial::random::random_ideal;
use agrees::monomial::{brute_colon, parse_ideal, render_ideal, sufficient_colon_bound, MonomialIdeal};
use agrees::render::{table_ascii, table_csv, table_json};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::OutputFormat;

/// What a command prints, plus the reason for exit status 1 if a checked
/// identity failed.
pub struct Report {
    pub body: String,
    pub counterexample: Option<String>,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, counterexample: None }
    }

    fn checked(body: String, holds: bool, what: impl FnOnce() -> String) -> Self {
        Report { body, counterexample: (!holds).then(what) }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn unsupported(format: OutputFormat, command: &str) -> Failure {
    Failure::Usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn read_ideal(path: &Path, dim: Option<usize>) -> Result<MonomialIdeal, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal(&text, dim).map_err(|e| match e {
        agrees::Error::Parse { line, reason } => Failure::Usage(format!("{}:{line}: {reason}", path.display())),
        other => Failure::Usage(format!("{}: {other}", path.display())),
    })
}

pub fn table(d_max: u32, ell_max: u32, format: OutputFormat) -> Result<Report, Failure> {
    let cells = agrees::table(d_max, ell_max)?;
    Ok(Report::ok(match format {
        OutputFormat::Ascii => table_ascii(&cells),
        OutputFormat::Csv => table_csv(&cells),
        OutputFormat::Json => table_json(&cells),
    }))
}

pub fn lemma_ineq(d_max: u32, ell_max: u32, report_gaps: bool, format: OutputFormat) -> Result<Report, Failure> {
    let outcome = sweep_inequality(SweepBounds { d_max, ell_max })?;
    let mut gaps = Vec::new();
    if report_gaps {
        for d in 3..=d_max {
            for ell in 2..=ell_max {
                gaps.push(ineq_sides(d, ell)?);
            }
        }
    }
    let body = match format {
        OutputFormat::Json => {
            let mut value = json!({
                "d_max": d_max,
                "ell_max": ell_max,
                "holds": outcome.holds(),
                "points_checked": outcome.points_checked,
                "zero_gap_points": outcome.zero_gap_points,
                "first_violation": outcome.first_violation,
            });
            if report_gaps {
                value["gaps"] = serde_json::to_value(&gaps).expect("gaps serialize");
            }
            pretty(&value)
        }
        OutputFormat::Ascii => {
            let mut out = String::new();
            for s in &gaps {
                out.push_str(&format!("gap({},{})={}\n", s.d, s.ell, s.gap));
            }
            out.push_str(&format!(
                "checked {} points with 3 <= d <= {d_max}, 2 <= l <= {ell_max}: {}\n",
                outcome.points_checked,
                if outcome.holds() {
                    format!("gap >= 0 everywhere, zero exactly at the {} points with l | d - 1", outcome.zero_gap_points)
                } else {
                    "VIOLATION".to_string()
                }
            ));
            out
        }
        OutputFormat::Csv => return Err(unsupported(format, "lemma-ineq")),
    };
    let violation = outcome.first_violation.clone();
    Ok(Report::checked(body, outcome.holds(), || format!("{violation:?}")))
}

pub fn good_check(dim: Option<usize>, ideal: &Path, reduction: &Path, format: OutputFormat) -> Result<Report, Failure> {
    let i = read_ideal(ideal, dim)?;
    let q = read_ideal(reduction, Some(i.dim()))?;
    let report = good_report(&i, &q)?;
    Ok(Report::ok(match format {
        OutputFormat::Json => pretty(&report),
        OutputFormat::Ascii => {
            let witness = match &report.witness {
                Some(w) => format!("\nwitness: {}", w.monomial()),
                None => String::new(),
            };
            format!(
                "I = {i}\nQ = {q}\nstable: {}\nQ : I = {}\ncolon closed: {}\ngood: {}{witness}\n",
                report.stable, report.colon_result, report.colon_closed, report.good
            )
        }
        OutputFormat::Csv => return Err(unsupported(format, "good-check")),
    }))
}

pub fn certificate(dim: u32, ell: u32, n_max: u32) -> Result<Report, Failure> {
    if dim != 2 {
        return Err(Failure::Usage(format!("certificates are only available for --dim 2, got {dim}")));
    }
    let cert = build_certificate_2dim(ell)?;
    let containment = claim_containment_by_degree(&cert, n_max)?;
    let holds = cert.is_valid() && containment.iter().all(|&ok| ok);
    let body = pretty(&json!({
        "ell": ell,
        "f": cert.f.to_string(),
        "g": cert.g.to_string(),
        "h": cert.h.to_string(),
        "J": cert.j.to_string(),
        "identities": cert.checks,
        "containment": containment,
        "degrees_checked": n_max,
    }));
    Ok(Report::checked(body, holds, || format!("certificate fails for l = {ell}")))
}

pub fn veronese(r: u32, ell: u32) -> Result<Report, Failure> {
    let inst = veronese_instance(r)?;
    let rep = good_agg_claim_report(&inst, ell)?;
    let body = pretty(&json!({
        "r": r,
        "ell": ell,
        "f": rep.f.to_string(),
        "g": rep.g.to_string(),
        "h": rep.h.to_string(),
        "identities": { "A": rep.identity_a, "B": rep.identity_b },
        "degrees_checked": 1,
        "precondition": rep.precondition,
        "precondition_variant": rep.precondition_variant,
        "x_not_in_mK": rep.x_not_in_mk,
        "minimal_multiplicity": rep.minimal_multiplicity,
    }));
    Ok(Report::checked(body, rep.holds(), || format!("Veronese claim fails for r = {r}, l = {ell}")))
}

pub fn classify(d: u32, ell: u32) -> Result<Report, Failure> {
    let (label, evidence) = agrees::classify(d, ell)?;
    Ok(Report::ok(pretty(&json!({ "d": d, "ell": ell, "label": label, "evidence": evidence }))))
}

pub fn ladder(d: u32, ell: u32) -> Result<Report, Failure> {
    Ok(Report::ok(pretty(&ladder_report(d, ell)?)))
}

pub fn colon(lhs: &Path, rhs: &Path, dim: Option<usize>, format: OutputFormat) -> Result<Report, Failure> {
    let a = read_ideal(lhs, dim)?;
    let b = read_ideal(rhs, Some(a.dim()))?;
    let c = a.colon(&b)?;
    Ok(Report::ok(match format {
        OutputFormat::Json => pretty(&json!({
            "dim": c.dim(),
            "gens": c.gens(),
            "display": c.to_string(),
        })),
        OutputFormat::Ascii => render_ideal(&c),
        OutputFormat::Csv => return Err(unsupported(format, "colon")),
    }))
}

pub fn oracle(seed: u64, trials: usize) -> Result<Report, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches: Vec<Value> = Vec::new();
    for trial in 0..trials {
        let dim = rng.gen_range(1..=3);
        let lhs = random_ideal(&mut rng, dim, 4, 5);
        let rhs = random_ideal(&mut rng, dim, 4, 5);
        let fast = lhs.colon(&rhs)?;
        let slow = brute_colon(&lhs, &rhs, sufficient_colon_bound(&lhs))?;
        if fast != slow {
            mismatches.push(json!({
                "trial": trial,
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "fast": fast.to_string(),
                "brute": slow.to_string(),
            }));
        }
    }
    let holds = mismatches.is_empty();
    let count = mismatches.len();
    let body = pretty(&json!({ "seed": seed, "trials": trials, "mismatches": mismatches }));
    Ok(Report::checked(body, holds, || format!("{count} colon mismatches")))
}
