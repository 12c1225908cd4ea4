//! Registry of the named algebras, their parameter constraints, and the
//! example structures of each table row.

mod checks;
mod completion;
mod data;
mod evidence;
mod export;

pub use checks::{
    corollary_type1_check, obstruction_agreement, table1_report, theorem_main_check,
    CellVerdict, CorollaryRecord, ObstructionRecord, RowReport, SampleReport, TheoremRecord,
    TheoremReport,
    ZInterpretation,
};
pub use completion::complete;
pub use evidence::{
    characteristic_polynomial, completely_solvable_evidence, real_root_count, square_free_factors,
    EvidenceReport, EvidenceSample, UniPoly,
};
pub use export::export;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcs::GCSCandidate;
use crate::io::{AlgebraFile, BracketEntry, McEntry, McTerm, Params};
use crate::lie::LieAlgebra;
use crate::poly::{parse, Polynomial, Var};
use crate::scalar::{format_rational, parse_rational, Rational};

use data::{Constants, EntryData, RowData, ENTRIES, ROWS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rel {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Rel {
    fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }

    fn holds(self, a: &Rational, b: &Rational) -> bool {
        match self {
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Eq => a == b,
            Rel::Ne => a != b,
            Rel::Gt => a > b,
            Rel::Ge => a >= b,
        }
    }
}

/// One parameter condition, e.g. `mu < lambda` or `lambda in {-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Atom {
    Cmp(Polynomial, Rel, Polynomial),
    In(String, Vec<Rational>),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cmp(a, r, b) => write!(f, "{a} {} {b}", r.symbol()),
            Atom::In(p, vs) => {
                let vs: Vec<String> = vs.iter().map(format_rational).collect();
                write!(f, "{p} in {{{}}}", vs.join(", "))
            }
        }
    }
}

impl Atom {
    pub fn holds(&self, params: &Params) -> Result<bool> {
        let env: HashMap<String, Rational> =
            params.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        match self {
            Atom::Cmp(a, r, b) => Ok(r.holds(&a.eval_named(&env)?, &b.eval_named(&env)?)),
            Atom::In(p, vs) => {
                let v = params
                    .get(p)
                    .ok_or_else(|| Error::Input(format!("missing value for parameter {p:?}")))?;
                Ok(vs.contains(v))
            }
        }
    }
}

fn parse_chain(s: &str) -> Result<(Vec<Polynomial>, Vec<Rel>)> {
    let mut parts = Vec::new();
    let mut rels = Vec::new();
    let b = s.as_bytes();
    let (mut i, mut start) = (0, 0);
    while i < b.len() {
        let two = if i + 1 < b.len() { &s[i..i + 2] } else { "" };
        let (rel, w) = match (b[i], two) {
            (_, "<=") => (Some(Rel::Le), 2),
            (_, ">=") => (Some(Rel::Ge), 2),
            (_, "!=") => (Some(Rel::Ne), 2),
            (b'<', _) => (Some(Rel::Lt), 1),
            (b'>', _) => (Some(Rel::Gt), 1),
            (b'=', _) => (Some(Rel::Eq), 1),
            _ => (None, 1),
        };
        if let Some(r) = rel {
            parts.push(&s[start..i]);
            rels.push(r);
            start = i + w;
        }
        i += w;
    }
    parts.push(&s[start..]);
    if rels.is_empty() {
        return Err(Error::Parse(format!("no relation in constraint {s:?}")));
    }
    let polys = parts.iter().map(|p| parse(p)).collect::<Result<Vec<_>>>()?;
    Ok((polys, rels))
}

/// Parses a constraint, allowing chains like `-1 < mu < lambda < 1`.
pub fn parse_constraint(s: &str) -> Result<Vec<Atom>> {
    if let Some((lhs, rhs)) = s.split_once(" in ") {
        let inner = rhs
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected {{...}} in {s:?}")))?;
        let vals = inner
            .split(',')
            .map(|v| parse_rational(v.trim()))
            .collect::<Result<Vec<_>>>()?;
        return Ok(vec![Atom::In(lhs.trim().to_string(), vals)]);
    }
    let (polys, rels) = parse_chain(s)?;
    Ok(rels
        .iter()
        .enumerate()
        .map(|(k, &r)| Atom::Cmp(polys[k].clone(), r, polys[k + 1].clone()))
        .collect())
}

/// Differences a constraint proves nonzero, including the transitive ones
/// of a chain: `-1 < mu < lambda` also gives `-1 - lambda`.
pub fn nonzero_differences(s: &str) -> Result<Vec<Polynomial>> {
    if s.contains(" in ") {
        return Ok(Vec::new());
    }
    let (polys, rels) = parse_chain(s)?;
    let mut out = Vec::new();
    for i in 0..rels.len() {
        if rels[i] == Rel::Ne {
            out.push(&polys[i] - &polys[i + 1]);
        }
        for j in i + 1..=rels.len() {
            let span = &rels[i..j];
            let up = span.iter().all(|r| matches!(r, Rel::Lt | Rel::Le));
            let down = span.iter().all(|r| matches!(r, Rel::Gt | Rel::Ge));
            let strict = span.iter().any(|r| matches!(r, Rel::Lt | Rel::Gt));
            if (up || down) && strict {
                out.push(&polys[i] - &polys[j]);
            }
        }
    }
    Ok(out)
}

/// Parses `"mu=-1/2, lambda=1/3"`; the empty string gives no parameters.
pub fn parse_assignment(s: &str) -> Result<Params> {
    let mut out = Params::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {part:?}")))?;
        out.insert(k.trim().to_string(), parse_rational(v.trim())?);
    }
    Ok(out)
}

fn check_atoms(name: &str, atoms: &[Atom], params: &Params) -> Result<()> {
    for a in atoms {
        if !a.holds(params)? {
            return Err(Error::Constraint {
                algebra: name.to_string(),
                detail: format!("requires {a}"),
            });
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
pub struct CatalogEntry {
    data: &'static EntryData,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatalogEntry({:?})", self.data.name)
    }
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn params(&self) -> &'static [&'static str] {
        self.data.params
    }

    pub fn constraint_strings(&self) -> &'static [&'static str] {
        self.data.constraints
    }

    pub fn constraints(&self) -> Vec<Atom> {
        self.data
            .constraints
            .iter()
            .flat_map(|c| parse_constraint(c).expect("catalog constraint parses"))
            .collect()
    }

    pub fn completely_solvable(&self) -> bool {
        self.data.completely_solvable
    }

    pub fn group(&self) -> &'static str {
        self.data.group
    }

    pub fn samples(&self) -> Vec<Params> {
        self.data
            .samples
            .iter()
            .map(|s| parse_assignment(s).expect("catalog sample parses"))
            .collect()
    }

    /// Primal basis labels (`e0..` or `X1..`).
    pub fn labels(&self) -> Vec<String> {
        let (p, first) = self.data.basis;
        (0..self.data.dim).map(|i| format!("{p}{}", i + first)).collect()
    }

    /// Labels of the cotangent basis: primal labels then `alpha` duals.
    pub fn cotangent_labels(&self) -> Vec<String> {
        let first = self.data.basis.1;
        let mut out = self.labels();
        out.extend((0..self.data.dim).map(|i| format!("alpha{}", i + first)));
        out
    }

    pub fn check_params(&self, params: &Params) -> Result<()> {
        for k in params.keys() {
            if !self.data.params.contains(&k.as_str()) {
                return Err(Error::Input(format!(
                    "{} has no parameter {k:?}",
                    self.data.name
                )));
            }
        }
        for p in self.data.params {
            if !params.contains_key(*p) {
                return Err(Error::Input(format!(
                    "{} needs a value for parameter {p:?}",
                    self.data.name
                )));
            }
        }
        check_atoms(self.data.name, &self.constraints(), params)
    }

    pub fn algebra_file(&self) -> AlgebraFile {
        let d = self.data;
        let params = d
            .params
            .iter()
            .map(|p| {
                let notes: Vec<&str> =
                    d.constraints.iter().copied().filter(|c| c.contains(p)).collect();
                (p.to_string(), notes.join("; "))
            })
            .collect();
        let (brackets, mc) = match &d.constants {
            Constants::Brackets(bs) => (
                Some(
                    bs.iter()
                        .map(|(i, j, cs)| BracketEntry {
                            i: *i,
                            j: *j,
                            coeffs: cs.iter().map(|(k, e)| (*k, e.to_string())).collect(),
                        })
                        .collect(),
                ),
                None,
            ),
            Constants::Mc(eqs) => (
                None,
                Some(
                    eqs.iter()
                        .map(|(k, ts)| McEntry {
                            k: *k,
                            terms: ts
                                .iter()
                                .map(|(i, j, c)| McTerm { i: *i, j: *j, c: c.to_string() })
                                .collect(),
                        })
                        .collect(),
                ),
            ),
        };
        AlgebraFile {
            name: d.name.to_string(),
            dim: d.dim,
            params,
            brackets,
            mc,
        }
    }

    /// Checks the constraints and returns the validated algebra.
    pub fn instantiate(&self, params: &Params) -> Result<LieAlgebra> {
        self.check_params(params)?;
        Ok(self.algebra_file().instantiate(params)?.with_labels(self.labels()))
    }

    /// Parameters missing from `params` stay symbolic.
    pub fn symbolic(&self, params: &Params) -> Result<LieAlgebra<Polynomial>> {
        Ok(self.algebra_file().instantiate_symbolic(params)?.with_labels(self.labels()))
    }

    /// Polynomials in the parameters that the constraints prove nonzero.
    pub fn nonzero_facts(&self) -> Vec<Polynomial> {
        self.data
            .constraints
            .iter()
            .flat_map(|c| nonzero_differences(c).expect("entry constraint parses"))
            .collect()
    }
}

pub fn entries() -> impl Iterator<Item = CatalogEntry> {
    ENTRIES.iter().map(|data| CatalogEntry { data })
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    entries()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
}

/// Instantiated, constraint-checked algebra.
pub fn get(name: &str, params: &Params) -> Result<LieAlgebra> {
    entry(name)?.instantiate(params)
}

/// A table cell: an example structure of the given type, quoted as a list
/// of images `J(u)=v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub type_k: usize,
    /// The action as quoted.
    pub action: String,
    /// Replacement used when the quoted action admits no structure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
}

impl Cell {
    /// The action the stored example realizes.
    pub fn realized(&self) -> &str {
        self.corrected.as_deref().unwrap_or(&self.action)
    }
}

fn squash(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Copy)]
pub struct TableRow {
    data: &'static RowData,
}

impl fmt::Debug for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableRow({:?})", self.data.label)
    }
}

static COMPLETIONS: LazyLock<Mutex<BTreeMap<(String, usize, String), Arc<GCSCandidate>>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

impl TableRow {
    pub fn label(&self) -> &'static str {
        self.data.label
    }

    pub fn entry(&self) -> CatalogEntry {
        entry(self.data.entry).expect("row entry is registered")
    }

    pub fn in_table(&self) -> bool {
        self.data.in_table
    }

    pub fn betti(&self) -> Option<(usize, usize)> {
        self.data.betti
    }

    pub fn has_symplectic(&self) -> bool {
        self.data.has_symplectic
    }

    pub fn has_complex(&self) -> bool {
        self.data.has_complex
    }

    pub fn cite(&self) -> &'static str {
        self.data.cite
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.data
            .cells
            .iter()
            .map(|(k, a)| Cell {
                type_k: *k,
                action: squash(a),
                corrected: self.data.corrections.iter().find(|(c, _)| c == k).map(|(_, a)| squash(a)),
            })
            .collect()
    }

    pub fn cell(&self, type_k: usize) -> Option<Cell> {
        self.cells().into_iter().find(|c| c.type_k == type_k)
    }

    /// Whether some generalized complex structure is recorded.
    pub fn has_gcs(&self) -> bool {
        !self.data.cells.is_empty()
    }

    pub fn constraints(&self) -> Vec<Atom> {
        let mut out = self.entry().constraints();
        out.extend(
            self.data
                .constraints
                .iter()
                .flat_map(|c| parse_constraint(c).expect("row constraint parses")),
        );
        out
    }

    pub fn check_params(&self, params: &Params) -> Result<()> {
        self.entry().check_params(params)?;
        check_atoms(self.data.label, &self.constraints(), params)
    }

    pub fn samples(&self) -> Vec<Params> {
        self.data
            .samples
            .iter()
            .map(|s| parse_assignment(s).expect("row sample parses"))
            .collect()
    }

    pub fn algebra(&self, params: &Params) -> Result<LieAlgebra> {
        self.check_params(params)?;
        self.entry().instantiate(params)
    }

    /// Where the row's `e_i` sits in the entry basis.
    pub fn table_basis(&self) -> Vec<usize> {
        if self.data.table_basis.is_empty() {
            (0..self.entry().dim()).collect()
        } else {
            self.data.table_basis.to_vec()
        }
    }

    /// Cotangent labels of the entry's basis vectors as the row writes them.
    pub fn cotangent_labels(&self) -> Vec<String> {
        let own = self.entry().cotangent_labels();
        let m = self.entry().dim();
        let mut out = own.clone();
        for (i, &k) in self.table_basis().iter().enumerate() {
            out[k] = own[i].clone();
            out[m + k] = own[m + i].clone();
        }
        out
    }

    fn cell_or_err(&self, type_k: usize) -> Result<Cell> {
        self.cell(type_k)
            .ok_or_else(|| Error::Input(format!("{} has no type {type_k} example", self.label())))
    }

    /// Quoted images of a cell at the given parameters, as
    /// `(source index, image vector)` in the entry's cotangent basis.
    pub fn quoted_images(&self, type_k: usize, params: &Params) -> Result<Vec<(usize, Vec<Rational>)>> {
        parse_action(&self.cell_or_err(type_k)?.action, &self.cotangent_labels(), params)
    }

    /// Images the stored example realizes; differs from the quoted ones only
    /// for corrected cells.
    pub fn realized_images(&self, type_k: usize, params: &Params) -> Result<Vec<(usize, Vec<Rational>)>> {
        parse_action(self.cell_or_err(type_k)?.realized(), &self.cotangent_labels(), params)
    }

    /// Full example matrix of a cell; partial actions are completed exactly.
    pub fn structure(&self, type_k: usize, params: &Params) -> Result<GCSCandidate> {
        let l = self.algebra(params)?;
        let key = (
            self.label().to_string(),
            type_k,
            crate::io::params_strings(params).into_iter().map(|(k, v)| format!("{k}={v};")).collect(),
        );
        if let Some(j) = COMPLETIONS.lock().expect("cache lock").get(&key) {
            return Ok((**j).clone());
        }
        let n = 2 * l.dim();
        let pairs: Vec<(Vec<Rational>, Vec<Rational>)> = self
            .realized_images(type_k, params)?
            .into_iter()
            .map(|(s, v)| {
                let mut u = vec![Rational::zero(); n];
                u[s] = Rational::from_integer(1.into());
                (u, v)
            })
            .collect();
        let j = complete(&l, &pairs, type_k)?;
        COMPLETIONS.lock().expect("cache lock").insert(key, Arc::new(j.clone()));
        Ok(j)
    }
}

/// Parses `J(u)=v, ...` over the given basis labels.
pub fn parse_action(action: &str, labels: &[String], params: &Params) -> Result<Vec<(usize, Vec<Rational>)>> {
    let subst: HashMap<Var, Polynomial> = params
        .iter()
        .map(|(k, v)| (Var::new(k), Polynomial::constant(v.clone())))
        .collect();
    let index = |name: &str| {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::Parse(format!("unknown basis vector {name:?}")))
    };
    let mut out = Vec::new();
    for part in action.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (lhs, rhs) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected J(u)=v, got {part:?}")))?;
        let src = lhs
            .trim()
            .strip_prefix("J(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected J(u) on the left of {part:?}")))?;
        let s = index(src.trim())?;
        let image = parse(rhs)?.substitute(&subst);
        let mut v = vec![Rational::zero(); labels.len()];
        for (m, c) in image.terms() {
            let pw = m.powers();
            if pw.len() != 1 || pw[0].1 != 1 {
                return Err(Error::Parse(format!("image {rhs:?} is not linear in the basis")));
            }
            let k = index(&pw[0].0.name())?;
            v[k] = v[k].clone() + c.clone();
        }
        out.push((s, v));
    }
    Ok(out)
}

/// Formats a vector as `2*alpha3 - e1` in the given labels.
pub fn format_image(v: &[Rational], labels: &[String]) -> String {
    let mut p = Polynomial::zero();
    for (c, l) in v.iter().zip(labels) {
        if !c.is_zero() {
            p = p + Polynomial::var(l).scale(c);
        }
    }
    p.to_string()
}

pub fn rows() -> impl Iterator<Item = TableRow> {
    ROWS.iter().map(|data| TableRow { data })
}

pub fn table_rows() -> impl Iterator<Item = TableRow> {
    rows().filter(|r| r.in_table())
}

pub fn row(label: &str) -> Result<TableRow> {
    rows()
        .find(|r| r.label() == label)
        .ok_or_else(|| Error::UnknownAlgebra(label.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn p(s: &str) -> Params {
        parse_assignment(s).unwrap()
    }

    #[test]
    fn constraint_chains() {
        let atoms = parse_constraint("-1 < mu < lambda < 1").unwrap();
        assert_eq!(atoms.len(), 3);
        assert!(atoms.iter().all(|a| a.holds(&p("mu=-1/2, lambda=1/3")).unwrap()));
        assert!(!atoms[1].holds(&p("mu=1/2, lambda=1/2")).unwrap());
        let a = parse_constraint("lambda in {-1, 0, 1}").unwrap();
        assert!(a[0].holds(&p("lambda=0")).unwrap());
        assert!(!a[0].holds(&p("lambda=2")).unwrap());
    }

    #[test]
    fn get_examples() {
        let l = get("r4,lambda", &p("lambda=1/2")).unwrap();
        assert_eq!(l.bracket_basis(0, 3), vec![int(0), int(0), int(1), frac(1, 2)]);
        let d4 = get("d4", &Params::new()).unwrap();
        assert_eq!(d4.bracket_basis(1, 2), vec![int(0), int(0), int(0), int(1)]);
        let err = get("r4,mu,lambda", &p("mu=1/2, lambda=1/2")).unwrap_err();
        assert!(matches!(err, Error::Constraint { .. }), "{err}");
        assert!(get("r4,lambda", &p("lambda=1")).is_err());
        assert!(matches!(get("nope", &Params::new()), Err(Error::UnknownAlgebra(_))));
    }

    #[test]
    fn catalog_has_the_expected_names() {
        assert_eq!(names().len(), 25);
        assert_eq!(table_rows().count(), 31);
        for r in rows() {
            assert!(entry(r.entry().name()).is_ok());
        }
    }

    #[test]
    fn samples_satisfy_constraints() {
        for e in entries() {
            assert!(!e.samples().is_empty());
            for s in e.samples() {
                e.instantiate(&s).unwrap_or_else(|err| panic!("{}: {err}", e.name()));
            }
        }
        for r in rows() {
            for s in r.samples() {
                r.check_params(&s).unwrap_or_else(|err| panic!("{}: {err}", r.label()));
            }
        }
    }

    #[test]
    fn g6_brackets_from_structure_equations() {
        let l = get("g6", &p("mu=3")).unwrap();
        // [X1,X2] = -X5, [X1,X5] = -X6 - mu X5, [X3,X4] = -X6
        assert_eq!(l.bracket_basis(0, 1), vec![int(0), int(0), int(0), int(0), int(-1), int(0)]);
        assert_eq!(l.bracket_basis(0, 4), vec![int(0), int(0), int(0), int(0), int(-3), int(-1)]);
        assert_eq!(l.bracket_basis(2, 3), vec![int(0), int(0), int(0), int(0), int(0), int(-1)]);
        assert_eq!(l.nonzero_brackets().len(), 3);
    }

    #[test]
    fn action_parsing() {
        let labels = entry("d'4,lambda").unwrap().cotangent_labels();
        let v = parse_action("J(e0)=2*lambda*alpha3, J(e1)=-e2", &labels, &p("lambda=1/2")).unwrap();
        assert_eq!(v[0].0, 0);
        assert_eq!(v[0].1[7], int(1));
        assert_eq!(format_image(&v[1].1, &labels), "-e2");
        assert!(parse_action("J(e9)=e1", &labels, &Params::new()).is_err());
    }
}
