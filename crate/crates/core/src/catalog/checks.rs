//! Table reproduction and the theorem-level cross checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{format_image, rows, TableRow};
use crate::cohomology::{betti, symplectic_obstruction};
use crate::error::Result;
use crate::gcs::verify;
use crate::io::{matrix_strings, params_strings, Params};
use crate::lie::{characteristic_subspaces, cotangent, quotient, LieAlgebra, Subspace};
use std::collections::BTreeMap;

/// `(b_1, b_3)` of the cotangent algebra.
fn cotangent_betti(l: &LieAlgebra) -> Result<(usize, usize)> {
    let t = cotangent(l).total;
    Ok((betti(&t, 1)?, betti(&t, 3)?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellVerdict {
    pub type_k: usize,
    pub action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
    /// Images recomputed from the matrix, in the quoted format.
    pub recomputed: String,
    pub quoted_matches: bool,
    pub realized_matches: bool,
    pub verified: bool,
    pub computed_type: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CellVerdict {
    pub fn passed(&self) -> bool {
        self.realized_matches && self.verified && self.computed_type == Some(self.type_k)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub params: BTreeMap<String, String>,
    pub betti_expected: Option<(usize, usize)>,
    pub betti_computed: Option<(usize, usize)>,
    pub cells: Vec<CellVerdict>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowReport {
    pub label: String,
    pub entry: String,
    pub in_table: bool,
    pub types_present: Vec<usize>,
    pub samples: Vec<SampleReport>,
    pub agrees: bool,
}

fn check_cell(row: &TableRow, type_k: usize, params: &Params) -> CellVerdict {
    let cell = row.cell(type_k).expect("cell exists");
    let labels = row.cotangent_labels();
    let fail = |e: String| CellVerdict {
        type_k,
        action: cell.action.clone(),
        corrected: cell.corrected.clone(),
        recomputed: String::new(),
        quoted_matches: false,
        realized_matches: false,
        verified: false,
        computed_type: None,
        matrix: None,
        error: Some(e),
    };
    let run = || -> Result<CellVerdict> {
        let l = row.algebra(params)?;
        let j = row.structure(type_k, params)?;
        let quoted = row.quoted_images(type_k, params)?;
        let realized = row.realized_images(type_k, params)?;
        let quoted_matches = quoted.iter().all(|(s, v)| &j.image(*s) == v);
        let realized_matches = realized.iter().all(|(s, v)| &j.image(*s) == v);
        let recomputed = realized
            .iter()
            .map(|(s, _)| format!("J({})={}", labels[*s], format_image(&j.image(*s), &labels)))
            .collect::<Vec<_>>()
            .join(", ");
        let rep = verify(&l, &j)?;
        Ok(CellVerdict {
            type_k,
            action: cell.action.clone(),
            corrected: cell.corrected.clone(),
            recomputed,
            quoted_matches,
            realized_matches,
            verified: rep.passed(),
            computed_type: rep.type_k,
            matrix: Some(matrix_strings(j.matrix())),
            error: None,
        })
    };
    run().unwrap_or_else(|e| fail(e.to_string()))
}

fn row_report(row: TableRow) -> RowReport {
    let samples = row
        .samples()
        .iter()
        .map(|p| {
            let l = row.algebra(p);
            let betti_computed = match (&l, row.betti()) {
                (Ok(l), Some(_)) => cotangent_betti(l).ok(),
                _ => None,
            };
            let cells: Vec<CellVerdict> =
                row.cells().iter().map(|c| check_cell(&row, c.type_k, p)).collect();
            let agrees = l.is_ok()
                && (row.betti().is_none() || betti_computed == row.betti())
                && cells.iter().all(CellVerdict::passed);
            SampleReport {
                params: params_strings(p),
                betti_expected: row.betti(),
                betti_computed,
                cells,
                agrees,
            }
        })
        .collect::<Vec<_>>();
    RowReport {
        label: row.label().to_string(),
        entry: row.entry().name().to_string(),
        in_table: row.in_table(),
        types_present: row.cells().iter().map(|c| c.type_k).collect(),
        agrees: samples.iter().all(|s| s.agrees),
        samples,
    }
}

/// Betti numbers and example structures for every row at every sample.
pub fn table1_report() -> Vec<RowReport> {
    let all: Vec<TableRow> = rows().collect();
    all.into_par_iter().map(row_report).collect()
}

/// Reading of `z(g')` in the main theorem's condition (a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZInterpretation {
    CenterOfDerived,
    CentralizerOfDerived,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremRecord {
    pub row: String,
    pub params: BTreeMap<String, String>,
    pub b1: usize,
    pub b3: usize,
    pub quotient_b1_center: usize,
    pub quotient_b1_centralizer: usize,
    pub condition_center: bool,
    pub condition_centralizer: bool,
    pub no_gcs: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub records: Vec<TheoremRecord>,
    pub mismatches_center: Vec<String>,
    pub mismatches_centralizer: Vec<String>,
    /// An interpretation with no mismatches, if any.
    pub interpretation: Option<ZInterpretation>,
}

fn quotient_b1(l: &LieAlgebra, z: &Subspace) -> Result<usize> {
    let q = quotient(l, z)?;
    if q.dim() == 0 {
        return Ok(0);
    }
    betti(&q, 1)
}

/// Condition (a) `b1 = 3, b3 = 5, b1(g/z(g')) = 1` or (b) `b1 = 1, b3 = 2`,
/// compared with the absence of any structure, on every completely
/// solvable four-dimensional row.
pub fn theorem_main_check() -> Result<TheoremReport> {
    let all: Vec<(TableRow, Params)> = rows()
        .filter(|r| r.entry().dim() == 4 && r.entry().completely_solvable())
        .flat_map(|r| r.samples().into_iter().map(move |p| (r, p)))
        .collect();
    let records = all
        .into_par_iter()
        .map(|(row, p)| -> Result<TheoremRecord> {
            let l = row.algebra(&p)?;
            let (b1, b3) = cotangent_betti(&l)?;
            let cs = characteristic_subspaces(&l);
            let center_of_derived = cs.derived.intersection(&cs.centralizer_of_derived);
            let qc = quotient_b1(&l, &center_of_derived)?;
            let qz = quotient_b1(&l, &cs.centralizer_of_derived)?;
            let cond = |q: usize| (b1 == 3 && b3 == 5 && q == 1) || (b1 == 1 && b3 == 2);
            Ok(TheoremRecord {
                row: row.label().to_string(),
                params: params_strings(&p),
                b1,
                b3,
                quotient_b1_center: qc,
                quotient_b1_centralizer: qz,
                condition_center: cond(qc),
                condition_centralizer: cond(qz),
                no_gcs: !row.has_gcs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let tag = |r: &TheoremRecord| format!("{} {:?}", r.row, r.params);
    let mismatches_center: Vec<String> =
        records.iter().filter(|r| r.condition_center != r.no_gcs).map(tag).collect();
    let mismatches_centralizer: Vec<String> =
        records.iter().filter(|r| r.condition_centralizer != r.no_gcs).map(tag).collect();
    let interpretation = if mismatches_centralizer.is_empty() {
        Some(ZInterpretation::CentralizerOfDerived)
    } else if mismatches_center.is_empty() {
        Some(ZInterpretation::CenterOfDerived)
    } else {
        None
    };
    Ok(TheoremReport {
        records,
        mismatches_center,
        mismatches_centralizer,
        interpretation,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorollaryRecord {
    pub row: String,
    pub params: BTreeMap<String, String>,
    pub b1: usize,
    pub b3: usize,
    pub completely_solvable: bool,
    pub condition: bool,
    pub no_type1: bool,
    pub agrees: bool,
}

/// On every four-dimensional row with some structure: no type 1 exactly
/// when completely solvable with `(b1, b3)` equal to `(1, 1)` or `(2, 4)`.
pub fn corollary_type1_check() -> Result<Vec<CorollaryRecord>> {
    let all: Vec<(TableRow, Params)> = rows()
        .filter(|r| r.entry().dim() == 4 && r.has_gcs())
        .flat_map(|r| r.samples().into_iter().map(move |p| (r, p)))
        .collect();
    all.into_par_iter()
        .map(|(row, p)| {
            let l = row.algebra(&p)?;
            let (b1, b3) = cotangent_betti(&l)?;
            let cs = row.entry().completely_solvable();
            let condition = cs && ((b1 == 1 && b3 == 1) || (b1 == 2 && b3 == 4));
            let no_type1 = row.cell(1).is_none();
            Ok(CorollaryRecord {
                row: row.label().to_string(),
                params: params_strings(&p),
                b1,
                b3,
                completely_solvable: cs,
                condition,
                no_type1,
                agrees: condition == no_type1,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionRecord {
    pub row: String,
    pub params: BTreeMap<String, String>,
    pub obstructed: bool,
    pub type0_present: bool,
    pub agrees: bool,
}

/// Symplectic obstruction against the type-0 column, row by row.
pub fn obstruction_agreement() -> Result<Vec<ObstructionRecord>> {
    let all: Vec<(TableRow, Params)> = rows()
        .filter(|r| r.in_table())
        .flat_map(|r| r.samples().into_iter().map(move |p| (r, p)))
        .collect();
    all.into_par_iter()
        .map(|(row, p)| {
            let l = row.algebra(&p)?;
            let obstructed = symplectic_obstruction(&l)?.is_obstructed();
            let type0_present = row.cell(0).is_some();
            Ok(ObstructionRecord {
                row: row.label().to_string(),
                params: params_strings(&p),
                obstructed,
                type0_present,
                agrees: obstructed != type0_present,
            })
        })
        .collect()
}
