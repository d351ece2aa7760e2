//! Seeded `G(n, p)` clique-number experiments.

use crate::graph::{gnp, PRNG_ALGORITHM};
use crate::solve::{chromatic_number, max_clique, Budget, SolveError, DEFAULT_BUDGET};
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

/// Largest `n` accepted (exact clique search on random graphs stays fast).
pub const MAX_N: usize = 200;

#[derive(Debug, Error, PartialEq)]
pub enum ExperimentError {
    #[error("n = {0} outside the supported range 2..={MAX_N}")]
    N(usize),
    #[error("p = {0} must lie strictly between 0 and 1")]
    Probability(f64),
    #[error("epsilon = {0} must be finite and non-negative")]
    Epsilon(f64),
    #[error("at least one trial is required")]
    NoTrials,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GnpConfig {
    pub ns: Vec<usize>,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub epsilon: f64,
    /// `chi` is computed only for `n <= chi_cap`.
    pub chi_cap: usize,
    /// Node budget per solver call.
    pub budget: u64,
}

impl Default for GnpConfig {
    fn default() -> Self {
        GnpConfig {
            ns: vec![50],
            p: 0.5,
            trials: 20,
            seed: 0,
            epsilon: 0.5,
            chi_cap: 60,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// One trial. All fields are deterministic functions of the configuration,
/// so re-running reproduces identical records; wall-clock time is kept in
/// the summary only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub edges: usize,
    /// `None` when the clique search ran out of budget.
    pub omega: Option<usize>,
    /// `None` when above the cap or out of budget.
    pub chi: Option<usize>,
    /// `2 ln n / ln(1/p)`.
    pub bollobas_bound: f64,
    /// `omega <= (1 + epsilon) * bollobas_bound`, when `omega` is known.
    pub within_bound: Option<bool>,
    /// Search nodes used by all solver calls of the trial.
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub epsilon: f64,
    pub violations: usize,
    pub inconclusive: usize,
    /// Violations over conclusive trials (0 when none are conclusive).
    pub violation_fraction: f64,
    pub prng: String,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutcome {
    pub records: Vec<ExperimentRecord>,
    pub summary: ExperimentSummary,
}

pub fn bollobas_bound(n: usize, p: f64) -> f64 {
    2.0 * (n as f64).ln() / (1.0 / p).ln()
}

fn check(config: &GnpConfig) -> Result<(), ExperimentError> {
    if let Some(&n) = config.ns.iter().find(|&&n| !(2..=MAX_N).contains(&n)) {
        return Err(ExperimentError::N(n));
    }
    if !(config.p > 0.0 && config.p < 1.0) {
        return Err(ExperimentError::Probability(config.p));
    }
    if !(config.epsilon.is_finite() && config.epsilon >= 0.0) {
        return Err(ExperimentError::Epsilon(config.epsilon));
    }
    if config.trials == 0 || config.ns.is_empty() {
        return Err(ExperimentError::NoTrials);
    }
    Ok(())
}

/// For each `n` in order, `trials` graphs `G(n, p)`; trial `t` (counted
/// across all `n`) uses seed `seed + t`.
pub fn run_gnp_experiment(config: &GnpConfig) -> Result<ExperimentOutcome, ExperimentError> {
    check(config)?;
    let start = Instant::now();
    let mut records = Vec::with_capacity(config.ns.len() * config.trials);
    for &n in &config.ns {
        for _ in 0..config.trials {
            let trial = records.len();
            let seed = config.seed.wrapping_add(trial as u64);
            let g = gnp(n, config.p, seed).map_err(|_| ExperimentError::Probability(config.p))?;
            let mut budget = Budget::new(config.budget);
            let omega = match max_clique(&g, &mut budget) {
                Ok(r) => Some(r.value),
                Err(SolveError::Inconclusive { .. }) => None,
                Err(e) => unreachable!("clique search on a valid graph: {e}"),
            };
            let mut nodes = budget.used().min(config.budget);
            let chi = if n <= config.chi_cap {
                let mut budget = Budget::new(config.budget);
                let chi = chromatic_number(&g, &mut budget).ok().map(|r| r.value);
                nodes += budget.used().min(config.budget);
                chi
            } else {
                None
            };
            let bound = bollobas_bound(n, config.p);
            records.push(ExperimentRecord {
                trial,
                seed,
                n,
                p: config.p,
                edges: g.edge_count(),
                omega,
                chi,
                bollobas_bound: bound,
                within_bound: omega.map(|w| w as f64 <= (1.0 + config.epsilon) * bound),
                nodes,
            });
        }
    }
    let violations = records.iter().filter(|r| r.within_bound == Some(false)).count();
    let inconclusive = records.iter().filter(|r| r.omega.is_none()).count();
    let conclusive = records.len() - inconclusive;
    Ok(ExperimentOutcome {
        summary: ExperimentSummary {
            trials: records.len(),
            epsilon: config.epsilon,
            violations,
            inconclusive,
            violation_fraction: if conclusive == 0 {
                0.0
            } else {
                violations as f64 / conclusive as f64
            },
            prng: PRNG_ALGORITHM.to_owned(),
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        },
        records,
    })
}
