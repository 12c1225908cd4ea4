//! Numeric feasibility search with exact certification.
//!
//! A float minimum only ever counts as evidence. The only claim the
//! search makes is a certified structure, and that has passed the exact
//! verifier.

mod optimize;
mod reconstruct;
mod system;

pub use reconstruct::{approximate, convergents, MAX_DENOMINATOR};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcs::GCSCandidate;
use crate::io::ser_matrix;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Rational;
use system::System;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub master_seed: u64,
    pub success_residual: f64,
    pub type_constraint: Option<usize>,
    /// Every free entry stays in `[-bound, bound]`.
    pub bound: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 200,
            max_iters: 500,
            master_seed: 0,
            success_residual: 1e-10,
            type_constraint: None,
            bound: 4.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reconstruction {
    /// Every coordinate rounded with one denominator bound.
    Rounded,
    /// Coordinates fixed one at a time with the rest re-solved.
    Snapped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certified {
    pub restart: usize,
    pub type_k: usize,
    pub reconstruction: Reconstruction,
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Matrix<Rational>,
}

impl Certified {
    pub fn candidate(&self) -> GCSCandidate {
        GCSCandidate::new(self.matrix.clone()).expect("square even order")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub schema: &'static str,
    pub algebra: String,
    pub config: SearchConfig,
    /// Names of the free entries, in `best_point` order.
    pub variables: Vec<String>,
    pub restarts_run: usize,
    pub best_restart: usize,
    pub best_residual: f64,
    pub best_point: Vec<f64>,
    pub certified: Option<Certified>,
    /// Final residual of each restart.
    pub history: Vec<f64>,
    pub note: &'static str,
}

impl SearchReport {
    pub fn is_certified(&self) -> bool {
        self.certified.is_some()
    }
}

const NOTE: &str = "residuals are numerical evidence only; a certified structure has passed exact verification";

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of restart `i`; depends only on the master seed and `i`.
pub fn restart_seed(master: u64, i: usize) -> u64 {
    splitmix(master ^ splitmix(i as u64))
}

struct Outcome {
    residual: f64,
    point: Vec<f64>,
    certified: Option<Certified>,
}

fn run_restart(sys: &System, l: &LieAlgebra, cfg: &SearchConfig, i: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(cfg.master_seed, i));
    let mut x: Vec<f64> = (0..sys.n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    optimize::descend(sys, &mut x, cfg.bound, cfg.max_iters, cfg.success_residual);
    let all: Vec<usize> = (0..sys.n).collect();
    let mut residual = optimize::polish(sys, &mut x, cfg.bound, &all, 100);
    if !residual.is_finite() {
        residual = f64::INFINITY;
    }
    let mut certified = None;
    if residual < cfg.success_residual {
        let exact = reconstruct::round(sys, l, &x, cfg.type_constraint)
            .map(|e| (e, Reconstruction::Rounded))
            .or_else(|| reconstruct::snap(sys, l, &x, cfg.bound, cfg.type_constraint).map(|e| (e, Reconstruction::Snapped)));
        certified = exact.map(|(e, how)| Certified {
            restart: i,
            type_k: e.type_k,
            reconstruction: how,
            matrix: e.candidate.into_matrix(),
        });
    }
    Outcome { residual, point: x, certified }
}

fn search(l: &LieAlgebra, cfg: &SearchConfig) -> Result<SearchReport> {
    let m = l.dim();
    if m % 2 == 1 {
        return Err(Error::Precondition(format!("search needs an even-dimensional algebra, got dim {m}")));
    }
    if !(cfg.bound > 1.0) {
        return Err(Error::Input(format!("search bound must exceed 1, got {}", cfg.bound)));
    }
    if let Some(k) = cfg.type_constraint {
        if k > m / 2 {
            return Err(Error::Precondition(format!("type {k} out of range 0..={}", m / 2)));
        }
    }
    let sys = System::new(l, cfg.type_constraint);
    // Restarts run in batches; results past the first certified restart
    // are dropped, so the report does not depend on the batch size.
    let batch = rayon::current_num_threads().max(1) * 2;
    let mut outcomes: Vec<Outcome> = Vec::new();
    let mut start = 0;
    while start < cfg.restarts {
        let end = (start + batch).min(cfg.restarts);
        let mut part: Vec<Outcome> = (start..end).into_par_iter().map(|i| run_restart(&sys, l, cfg, i)).collect();
        if let Some(hit) = part.iter().position(|o| o.certified.is_some()) {
            part.truncate(hit + 1);
            outcomes.extend(part);
            break;
        }
        outcomes.extend(part);
        start = end;
    }
    let best = outcomes
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.residual.total_cmp(&b.1.residual).then(a.0.cmp(&b.0)))
        .map(|(i, _)| i);
    let (best_restart, best_residual, best_point) = match best {
        Some(i) => (i, outcomes[i].residual, outcomes[i].point.clone()),
        None => (0, f64::INFINITY, Vec::new()),
    };
    Ok(SearchReport {
        schema: "search-report/1",
        algebra: l.name().to_string(),
        config: cfg.clone(),
        variables: sys.layout.names.clone(),
        restarts_run: outcomes.len(),
        best_restart,
        best_residual,
        best_point,
        history: outcomes.iter().map(|o| o.residual).collect(),
        certified: outcomes.into_iter().find_map(|o| o.certified),
        note: NOTE,
    })
}

/// Looks for a structure of any type. `cfg.type_constraint` is ignored.
pub fn find_gcs(l: &LieAlgebra, cfg: &SearchConfig) -> Result<SearchReport> {
    search(l, &SearchConfig { type_constraint: None, ..cfg.clone() })
}

/// Looks for a structure of type `k`: the minors of `J_2` of order
/// `m - 2k + 2` are pushed to zero while those of order `m - 2k` are kept
/// away from zero by a hinge barrier.
pub fn find_gcs_of_type(l: &LieAlgebra, k: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    search(l, &SearchConfig { type_constraint: Some(k), ..cfg.clone() })
}
