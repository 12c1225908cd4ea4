use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::DeductionScript;
use crate::error::{Error, Result};

const SCRIPTS: &[(&str, &str)] = &[
    ("r_x_r3", include_str!("../../scripts/r_x_r3.json")),
    ("r_x_r3_lambda", include_str!("../../scripts/r_x_r3_lambda.json")),
    ("r4", include_str!("../../scripts/r4.json")),
    ("r4_lambda", include_str!("../../scripts/r4_lambda.json")),
    ("r4_mu_lambda", include_str!("../../scripts/r4_mu_lambda.json")),
    ("g6_complex", include_str!("../../scripts/g6_complex.json")),
];

const MANIFEST: &str = include_str!("../../scripts/manifest.json");

/// A quoted identity `label = text`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Display {
    pub label: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
}

/// What the quoted identity should read: the generator it really is and
/// its value at that point of the argument.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Erratum {
    pub generator: String,
    pub expected: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub script: String,
    /// Whether the script also checks with the parameters left symbolic.
    pub symbolic: bool,
    #[serde(default)]
    pub samples: Vec<BTreeMap<String, String>>,
    pub displays: Vec<Display>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: String,
    pub scripts: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn entry(&self, script: &str) -> Option<&ManifestEntry> {
        self.scripts.iter().find(|e| e.script == script)
    }
}

pub fn manifest() -> Manifest {
    serde_json::from_str(MANIFEST).expect("shipped manifest parses")
}

pub fn shipped_scripts() -> Vec<DeductionScript> {
    SCRIPTS
        .iter()
        .map(|(_, s)| DeductionScript::from_json(s).expect("shipped script parses"))
        .collect()
}

pub fn shipped_script(name: &str) -> Result<DeductionScript> {
    SCRIPTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| DeductionScript::from_json(s))
        .unwrap_or_else(|| Err(Error::Input(format!("no shipped script named {name:?}"))))
}
