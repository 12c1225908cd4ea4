//! JSON file formats for algebras and structures.
//!
//! Rational numbers are always written as strings `"p/q"` or `"p"`.
//! Coefficient entries may be expressions in the declared parameters.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Display;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, StructureEquations};
use crate::matrix::Matrix;
use crate::poly::{eval_expr, parse, Polynomial, Var};
use crate::scalar::{format_rational, parse_rational, Rational, Ring};

/// Basis convention every structure file must state verbatim.
pub const CONVENTION: &str = "Xi=(e_{i-1},0); X_{i+m}=(0,a^{i-1})";

pub type Params = BTreeMap<String, Rational>;

pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn ser_matrix<S: Serializer>(m: &Matrix<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    matrix_strings(m).serialize(s)
}

pub fn ser_display<T: Display, S: Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn ser_params<S: Serializer>(p: &Params, s: S) -> std::result::Result<S::Ok, S::Error> {
    params_strings(p).serialize(s)
}

pub fn params_strings(p: &Params) -> BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect()
}

pub fn matrix_strings(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

pub fn parse_params(raw: &BTreeMap<String, String>) -> Result<Params> {
    raw.iter()
        .map(|(k, v)| Ok((k.clone(), parse_rational(v)?)))
        .collect()
}

fn param_map(p: &Params) -> HashMap<String, Rational> {
    p.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McTerm {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McEntry {
    pub k: usize,
    pub terms: Vec<McTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<BracketEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mc: Option<Vec<McEntry>>,
}

impl AlgebraFile {
    fn build<R: Ring>(&self, eval: impl Fn(&str) -> Result<R>) -> Result<LieAlgebra<R>> {
        let l = match (&self.brackets, &self.mc) {
            (Some(bs), None) => {
                let mut out = Vec::new();
                for b in bs {
                    let mut v = vec![R::zero(); self.dim];
                    for (&k, e) in &b.coeffs {
                        if k >= self.dim {
                            return Err(Error::Input(format!("basis index {k} out of range")));
                        }
                        v[k] = eval(e)?;
                    }
                    out.push((b.i, b.j, v));
                }
                LieAlgebra::from_brackets(self.name.clone(), self.dim, out)?
            }
            (None, Some(mc)) => {
                let mut s = StructureEquations::new(self.dim);
                for e in mc {
                    for t in &e.terms {
                        s.push(e.k, t.i, t.j, eval(&t.c)?)?;
                    }
                }
                s.to_algebra(&self.name)?
            }
            _ => {
                return Err(Error::Input(
                    "algebra file needs exactly one of \"brackets\" or \"mc\"".into(),
                ))
            }
        };
        let rep = l.validate();
        if let Some(v) = rep.violations.first() {
            return Err(Error::Input(format!(
                "{} violates the Jacobi identity on ({}, {}, {})",
                self.name, v.i, v.j, v.k
            )));
        }
        Ok(l)
    }

    /// Substitutes parameter values, evaluates every coefficient and checks
    /// the Jacobi identity.
    pub fn instantiate(&self, params: &Params) -> Result<LieAlgebra> {
        let env = param_map(params);
        for p in self.params.keys() {
            if !env.contains_key(p) {
                return Err(Error::Input(format!("missing value for parameter {p:?}")));
            }
        }
        self.build(|e| eval_expr(e, &env))
    }

    /// Like `instantiate`, but parameters without a value stay symbolic:
    /// coefficients become polynomials in them.
    pub fn instantiate_symbolic(&self, params: &Params) -> Result<LieAlgebra<Polynomial>> {
        let map: HashMap<Var, Polynomial> = params
            .iter()
            .map(|(k, v)| (Var::new(k), Polynomial::constant(v.clone())))
            .collect();
        self.build(|e| Ok(parse(e)?.substitute(&map)))
    }

    /// Bracket form of an instantiated algebra.
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| BracketEntry {
                i,
                j,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                    .map(|(k, x)| (k, format_rational(x)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: l.name().to_string(),
            dim: l.dim(),
            params: BTreeMap::new(),
            brackets: Some(brackets),
            mc: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Named(String),
    Inline(AlgebraFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub algebra: AlgebraRef,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    pub matrix: Vec<Vec<String>>,
    pub convention: String,
}

impl StructureFile {
    pub fn check_convention(&self) -> Result<()> {
        if self.convention != CONVENTION {
            return Err(Error::Input(format!(
                "structure convention {:?} does not match the required {:?}",
                self.convention, CONVENTION
            )));
        }
        Ok(())
    }

    pub fn params(&self) -> Result<Params> {
        parse_params(&self.params)
    }

    /// Evaluates the matrix entries at the given parameter values.
    pub fn matrix(&self, params: &Params) -> Result<Matrix<Rational>> {
        self.check_convention()?;
        let env = param_map(params);
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|e| eval_expr(e, &env)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(rows)?;
        if !m.is_square() || m.rows() % 2 == 1 {
            return Err(Error::Input(format!(
                "structure matrix must be square of even order, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }

    pub fn new(algebra: AlgebraRef, params: &Params, m: &Matrix<Rational>) -> Self {
        StructureFile {
            algebra,
            params: params_strings(params),
            matrix: matrix_strings(m),
            convention: CONVENTION.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn parameterized_algebra_file() {
        let json = r#"{"name":"r","dim":4,"params":{"lambda":"lambda != -1,0,1"},
            "brackets":[{"i":0,"j":1,"coeffs":{"1":"1"}},
                        {"i":0,"j":2,"coeffs":{"2":"lambda"}},
                        {"i":0,"j":3,"coeffs":{"2":"1","3":"lambda"}}]}"#;
        let f: AlgebraFile = serde_json::from_str(json).unwrap();
        let mut p = Params::new();
        p.insert("lambda".into(), crate::scalar::frac(1, 2));
        let l = f.instantiate(&p).unwrap();
        assert_eq!(l.c(0, 3, 3), &crate::scalar::frac(1, 2));
        assert!(f.instantiate(&Params::new()).is_err());
        let back = AlgebraFile::from_algebra(&l).instantiate(&Params::new()).unwrap();
        assert_eq!(back.nonzero_brackets(), l.nonzero_brackets());
    }

    #[test]
    fn mc_form_uses_the_sign_convention() {
        let json = r#"{"name":"h","dim":3,"mc":[{"k":2,"terms":[{"i":0,"j":1,"c":"1"}]}]}"#;
        let f: AlgebraFile = serde_json::from_str(json).unwrap();
        let l = f.instantiate(&Params::new()).unwrap();
        assert_eq!(l.c(0, 1, 2), &int(-1));
    }

    #[test]
    fn wrong_convention_is_rejected() {
        let s = StructureFile {
            algebra: AlgebraRef::Named("aff(R)".into()),
            params: BTreeMap::new(),
            matrix: vec![vec!["0".into(); 4]; 4],
            convention: "Xi=(0,a^{i-1})".into(),
        };
        assert!(s.matrix(&Params::new()).is_err());
    }
}
