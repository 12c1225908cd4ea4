//! Certificate checking for non-existence arguments.
//!
//! A script names an algebra and a chain of deductions over the generic
//! structure's integrability polynomials (`N_ij^k` and `(J^2 + I)_i^j`).
//! The kernel re-verifies every step by exact polynomial arithmetic; it
//! never searches for a proof.

mod kernel;
mod shipped;

pub use kernel::{check_script, check_script_symbolic, ScriptReport, Stats, Verdict};
pub use shipped::{manifest, shipped_script, shipped_scripts, Display, Erratum, Manifest, ManifestEntry};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::Params;
use crate::symbolic::Mode;

pub const SCHEMA: &str = "replay/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Target {
    pub algebra: String,
    pub mode: Mode,
    /// Parameters fixed by the script; the rest come from the run.
    #[serde(default, skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    pub params: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeductionScript {
    pub schema: String,
    pub name: String,
    pub target: Target,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub steps: Vec<Step>,
}

/// A polynomial known to vanish: a generator or hypothesis by name, or a
/// combination of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Named(String),
    Combination { combination: Vec<Multiple> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Multiple {
    #[serde(default = "one")]
    pub multiplier: String,
    pub of: String,
}

/// `coeff * square^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareTerm {
    #[serde(default = "one")]
    pub coeff: String,
    pub square: String,
}

fn one() -> String {
    "1".to_string()
}

fn zero() -> String {
    "0".to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Branch {
    /// The factor assumed to vanish in this branch.
    pub factor: String,
    /// Closes the branch because the factor is nonzero by hypothesis.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub nonzero: bool,
    /// Variable to eliminate when the factor is linear in it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solve_for: Option<String>,
    /// Name for the assumption when it is kept as a hypothesis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    /// The generator, under the current substitutions, equals `expected`.
    Assert {
        generator: String,
        expected: String,
        /// Label under which the identity is quoted, when it differs.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        display: Option<String>,
    },
    /// `source = sum c_i q_i^2` with all `c_i` of one sign, so every `q_i`
    /// vanishes.
    Squares { source: Source, terms: Vec<SquareTerm> },
    /// Records `sum m_i g_i = result` as a new hypothesis.
    Combine { name: String, terms: Vec<Multiple>, result: String },
    /// `source = c * prod factors`; one branch per factor.
    Split { source: Source, branches: Vec<Branch> },
    /// Proves `goal = 0` in a sub-derivation, then eliminates `solve_for`
    /// (or the goal variable) or records the goal as hypothesis `name`.
    Lemma {
        goal: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        solve_for: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        steps: Vec<Step>,
    },
    /// Closes a lemma branch: the goal vanishes under the substitutions.
    Conclude,
    /// Replaces `variable` by `value`, justified by hypothesis `by`
    /// being a constant multiple of `variable - value`.
    Substitute { variable: String, value: String, by: String },
    /// `source = c + sum c_i q_i^2` with `c` nonzero and every `c_i` of
    /// the sign of `c` (or zero).
    Contradiction {
        source: Source,
        #[serde(default = "zero")]
        constant: String,
        #[serde(default)]
        terms: Vec<SquareTerm>,
    },
    /// `source = factor * (c + sum c_i q_i^2)` with `factor` nonzero by
    /// hypothesis.
    NonzeroContradiction {
        source: Source,
        factor: String,
        constant: String,
        #[serde(default)]
        terms: Vec<SquareTerm>,
    },
}

impl DeductionScript {
    pub fn from_json(s: &str) -> Result<Self> {
        let d: DeductionScript = serde_json::from_str(s)?;
        if d.schema != SCHEMA {
            return Err(Error::Input(format!("expected schema {SCHEMA:?}, got {:?}", d.schema)));
        }
        Ok(d)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Parameters the target fixes.
    pub fn fixed_params(&self) -> Result<Params> {
        crate::io::parse_params(&self.target.params)
    }

    /// Every step, depth first.
    pub fn walk(&self) -> Vec<&Step> {
        fn go<'a>(steps: &'a [Step], out: &mut Vec<&'a Step>) {
            for s in steps {
                out.push(s);
                match s {
                    Step::Split { branches, .. } => {
                        for b in branches {
                            go(&b.steps, out);
                        }
                    }
                    Step::Lemma { steps, .. } => go(steps, out),
                    _ => {}
                }
            }
        }
        let mut out = Vec::new();
        go(&self.steps, &mut out);
        out
    }

    /// Mutable access to the `n`-th assert in depth-first order.
    pub fn assert_mut(&mut self, n: usize) -> Option<&mut Step> {
        fn go<'a>(steps: &'a mut [Step], n: &mut usize) -> Option<&'a mut Step> {
            for s in steps {
                match s {
                    Step::Assert { .. } => {
                        if *n == 0 {
                            return Some(s);
                        }
                        *n -= 1;
                    }
                    Step::Split { branches, .. } => {
                        for b in branches {
                            if let Some(e) = go(&mut b.steps, n) {
                                return Some(e);
                            }
                        }
                    }
                    Step::Lemma { steps, .. } => {
                        if let Some(e) = go(steps, n) {
                            return Some(e);
                        }
                    }
                    _ => {}
                }
            }
            None
        }
        let mut n = n;
        go(&mut self.steps, &mut n)
    }

    pub fn assert_count(&self) -> usize {
        self.walk().iter().filter(|s| matches!(s, Step::Assert { .. })).count()
    }
}
