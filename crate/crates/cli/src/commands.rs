use std::path::Path;

use cotangent_gcs::catalog::{self, corollary_type1_check, table1_report, theorem_main_check};
use cotangent_gcs::cohomology::{betti as betti_k, symplectic_obstruction};
use cotangent_gcs::gcs::{gcs_from_subalgebra, i_eigenspace, verify as verify_gcs};
use cotangent_gcs::io::params_strings;
use cotangent_gcs::lie::cotangent;
use cotangent_gcs::replay::{check_script, check_script_symbolic, DeductionScript};
use cotangent_gcs::search::{find_gcs, find_gcs_of_type, SearchConfig};
use serde_json::{json, Value};

use crate::resolve::{algebra, parse_params, structure};
use crate::{AlgebraArgs, CmdResult, Outcome};

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value, String> {
    serde_json::to_value(x).map_err(|e| e.to_string())
}

fn done(report: Value, ok: bool, summary: String) -> CmdResult {
    Ok(Outcome { report, ok, summary })
}

pub fn list() -> CmdResult {
    let entries: Vec<Value> = catalog::entries()
        .map(|e| {
            json!({
                "name": e.name(),
                "dim": e.dim(),
                "params": e.params(),
                "constraints": e.constraint_strings(),
                "completely_solvable": e.completely_solvable(),
                "samples": e.samples().iter().map(params_strings).collect::<Vec<_>>(),
            })
        })
        .collect();
    let rows: Vec<Value> = catalog::rows()
        .map(|r| {
            json!({
                "label": r.label(),
                "entry": r.entry().name(),
                "in_table": r.in_table(),
                "types": r.cells().iter().map(|c| c.type_k).collect::<Vec<_>>(),
            })
        })
        .collect();
    let summary = format!("{} catalog entries, {} rows", entries.len(), rows.len());
    done(json!({ "schema": "list-report/1", "entries": entries, "rows": rows }), true, summary)
}

pub fn verify(alg: Option<String>, file: &Path, raw: &[String]) -> CmdResult {
    let (res, j) = structure(alg.as_deref(), file, raw)?;
    let rep = verify_gcs(&res.algebra, &j).map_err(|e| e.to_string())?;
    let ok = rep.passed();
    let summary = match rep.type_k {
        Some(k) if ok => format!("{}: generalized complex structure of type {k}", res.name),
        _ => format!(
            "{}: not a generalized complex structure (orthogonal {}, J^2=-1 {}, integrable {})",
            res.name, rep.orthogonal, rep.involutive, rep.integrable
        ),
    };
    let report = json!({
        "schema": "verify-report/1",
        "algebra": res.name,
        "params": params_strings(&res.params),
        "orthogonal": rep.orthogonal,
        "involutive": rep.involutive,
        "integrable": rep.integrable,
        "type": rep.type_k,
        "failures": to_value(&rep.failures)?,
    });
    done(report, ok, summary)
}

fn degree_range(s: Option<&str>, top: usize) -> Result<Vec<usize>, String> {
    let bad = || format!("bad --degrees {:?}; expected a..b or k", s.unwrap_or(""));
    let (lo, hi) = match s {
        None => (0, top),
        Some(s) => match s.split_once("..") {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => {
                let k = s.trim().parse().map_err(|_| bad())?;
                (k, k)
            }
        },
    };
    if lo > hi || hi > top {
        return Err(format!("degrees {lo}..{hi} out of range 0..{top}"));
    }
    Ok((lo..=hi).collect())
}

pub fn betti(args: &AlgebraArgs, on_cotangent: bool, degrees: Option<&str>) -> CmdResult {
    let res = algebra(&args.algebra, &parse_params(&args.params)?)?;
    let l = if on_cotangent { cotangent(&res.algebra).total } else { res.algebra.clone() };
    let degrees = degree_range(degrees, l.dim())?;
    let b = degrees
        .iter()
        .map(|&k| betti_k(&l, k))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let summary = format!(
        "{}{}: b = {:?} in degrees {}..{}",
        if on_cotangent { "T*" } else { "" },
        res.name,
        b,
        degrees[0],
        degrees[degrees.len() - 1]
    );
    let report = json!({
        "schema": "betti-report/1",
        "algebra": res.name,
        "params": params_strings(&res.params),
        "cotangent": on_cotangent,
        "degrees": degrees,
        "b": b,
    });
    done(report, true, summary)
}

/// Exit 0 with a witness form, 1 when no symplectic form exists.
pub fn obstruct(args: &AlgebraArgs) -> CmdResult {
    let res = algebra(&args.algebra, &parse_params(&args.params)?)?;
    let v = symplectic_obstruction(&res.algebra).map_err(|e| e.to_string())?;
    let obstructed = v.is_obstructed();
    let summary = if obstructed {
        format!("{}: no symplectic form (Pfaffian of the generic closed 2-form vanishes)", res.name)
    } else {
        format!("{}: symplectic form found", res.name)
    };
    let report = json!({
        "schema": "obstruct-report/1",
        "algebra": res.name,
        "params": params_strings(&res.params),
        "verdict": to_value(&v)?,
    });
    done(report, !obstructed, summary)
}

pub fn table1() -> CmdResult {
    let rows = table1_report();
    let mismatches: Vec<Value> = rows
        .iter()
        .flat_map(|r| {
            r.samples.iter().filter(|s| !s.agrees).map(move |s| {
                json!({
                    "row": r.label,
                    "params": s.params,
                    "betti_expected": s.betti_expected,
                    "betti_computed": s.betti_computed,
                    "failed_cells": s.cells.iter().filter(|c| !c.passed()).map(|c| c.type_k).collect::<Vec<_>>(),
                })
            })
        })
        .collect();
    let checked: usize = rows.iter().map(|r| r.samples.len()).sum();
    let ok = mismatches.is_empty();
    let summary = format!("{} rows, {checked} samples, {} disagreements", rows.len(), mismatches.len());
    let report = json!({ "schema": "table1-report/1", "rows": to_value(&rows)?, "mismatches": mismatches });
    done(report, ok, summary)
}

pub fn theorem_main() -> CmdResult {
    let rep = theorem_main_check().map_err(|e| e.to_string())?;
    let ok = rep.interpretation.is_some();
    let summary = format!(
        "{} samples; mismatches: {} (centralizer of g'), {} (center of g'); interpretation {}",
        rep.records.len(),
        rep.mismatches_centralizer.len(),
        rep.mismatches_center.len(),
        rep.interpretation.map_or("none".into(), |i| format!("{i:?}"))
    );
    let mut report = to_value(&rep)?;
    report["schema"] = json!("theorem-main-report/1");
    done(report, ok, summary)
}

pub fn corollary_type1() -> CmdResult {
    let recs = corollary_type1_check().map_err(|e| e.to_string())?;
    let bad: Vec<&str> = recs.iter().filter(|r| !r.agrees).map(|r| r.row.as_str()).collect();
    let ok = bad.is_empty();
    let summary = format!("{} samples, {} mismatches", recs.len(), bad.len());
    let report = json!({ "schema": "corollary-type1-report/1", "records": to_value(&recs)?, "mismatches": bad });
    done(report, ok, summary)
}

#[allow(clippy::too_many_arguments)]
pub fn search(
    name: &str,
    raw: &[String],
    type_k: Option<usize>,
    seed: u64,
    restarts: Option<usize>,
    max_iters: Option<usize>,
    bound: Option<f64>,
) -> CmdResult {
    let res = algebra(name, &parse_params(raw)?)?;
    let d = SearchConfig::default();
    let cfg = SearchConfig {
        restarts: restarts.unwrap_or(d.restarts),
        max_iters: max_iters.unwrap_or(d.max_iters),
        master_seed: seed,
        bound: bound.unwrap_or(d.bound),
        ..d
    };
    let rep = match type_k {
        Some(k) => find_gcs_of_type(&res.algebra, k, &cfg),
        None => find_gcs(&res.algebra, &cfg),
    }
    .map_err(|e| e.to_string())?;
    let summary = match &rep.certified {
        Some(c) => format!("{}: certified a type {} structure at restart {}", res.name, c.type_k, c.restart),
        None => format!(
            "{}: nothing certified in {} restarts; best residual {:e} (evidence only)",
            res.name, rep.restarts_run, rep.best_residual
        ),
    };
    let mut report = to_value(&rep)?;
    report["params"] = to_value(&params_strings(&res.params))?;
    done(report, rep.is_certified(), summary)
}

/// Parameters the script fixes or `--param` gives are concrete; any other
/// parameter of the target stays symbolic.
pub fn replay(file: &Path, raw: &[String]) -> CmdResult {
    let shown = file.display();
    let text = std::fs::read_to_string(file).map_err(|e| format!("{shown}: {e}"))?;
    let script = DeductionScript::from_json(&text).map_err(|e| format!("{shown}: {e}"))?;
    let params = parse_params(raw)?;
    let entry = catalog::entry(&script.target.algebra).map_err(|e| e.to_string())?;
    let fixed = script.fixed_params().map_err(|e| e.to_string())?;
    let complete = entry.params().iter().all(|p| params.contains_key(*p) || fixed.contains_key(*p));
    let rep = if complete { check_script(&script, &params) } else { check_script_symbolic(&script, &params) }
        .map_err(|e| e.to_string())?;
    let ok = rep.verdict.is_proved();
    let summary = match &rep.verdict {
        v if v.is_proved() => format!("{}: proved", rep.script),
        v => format!("{}: {}", rep.script, serde_json::to_string(v).unwrap_or_default()),
    };
    done(to_value(&rep)?, ok, summary)
}

pub fn export(dir: &Path) -> CmdResult {
    let files = catalog::export(dir).map_err(|e| e.to_string())?;
    let summary = format!("wrote {} files under {}", files.len(), dir.display());
    let names: Vec<String> = files.iter().map(|p| p.display().to_string()).collect();
    done(json!({ "schema": "export-report/1", "dir": dir.display().to_string(), "files": names }), true, summary)
}

pub fn eigenspace(alg: Option<String>, file: &Path, raw: &[String]) -> CmdResult {
    let (res, j) = structure(alg.as_deref(), file, raw)?;
    let m = res.algebra.dim();
    let q = i_eigenspace(&res.algebra, &j).map_err(|e| e.to_string())?;
    let check = q.check(&res.algebra);
    let round_trip = match &check {
        Ok(()) => gcs_from_subalgebra(&res.algebra, &q).map(|k| k.matrix() == j.matrix()).unwrap_or(false),
        Err(_) => false,
    };
    let ok = check.is_ok() && round_trip;
    let summary = match &check {
        Ok(()) => format!("{}: +i eigenspace is an isotropic subalgebra; round trip {round_trip}", res.name),
        Err(e) => format!("{}: {e}", res.name),
    };
    let report = json!({
        "schema": "eigenspace-report/1",
        "algebra": res.name,
        "params": params_strings(&res.params),
        "complex_dim": q.space.dim(),
        "expected_dim": m,
        "subalgebra": q.is_subalgebra(&res.algebra),
        "isotropic": q.is_isotropic(),
        "meets_conjugate_trivially": q.meets_conjugate_trivially(),
        "round_trip": round_trip,
        "failure": check.err().map(|e| e.to_string()),
    });
    done(report, ok, summary)
}
