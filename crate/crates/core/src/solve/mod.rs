//! Exact clique, independence and chromatic numbers for desk-scale graphs.
//!
//! Every solver counts search nodes against a [`Budget`]. Running out yields
//! [`SolveError::Inconclusive`], never a guessed value. Witnesses are
//! re-verified before being returned.

mod clique;
mod colour;

pub use clique::{max_clique, max_independent_set};
pub use colour::{chromatic_number, dsatur_greedy, greedy_colouring, is_bipartite, k_colourable};

use crate::graph::{complement, ClassicalColouring, Graph, GraphError};
use crate::report::{ConstraintKind, Report};
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error("search budget of {budget} nodes exhausted; result inconclusive")]
    Inconclusive { budget: u64 },
    #[error("k must be at least 1")]
    ZeroColours,
    #[error("witness failed re-verification: {0}")]
    WitnessCheckFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Search-node allowance shared by the calls of one solve.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SolveError::Inconclusive { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Chi,
    Omega,
    Alpha,
    Bipartite,
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parameter::Chi => "chi",
            Parameter::Omega => "omega",
            Parameter::Alpha => "alpha",
            Parameter::Bipartite => "bipartite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Vertices(Vec<usize>),
    Colouring(ClassicalColouring),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: u64,
    pub ms: f64,
    /// False only when a parallel search picked a witness nondeterministically.
    pub deterministic: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: Witness,
    pub stats: Stats,
}

impl SolveResult {
    pub fn colouring(&self) -> Option<&ClassicalColouring> {
        match &self.witness {
            Witness::Colouring(c) => Some(c),
            Witness::Vertices(_) => None,
        }
    }

    pub fn vertices(&self) -> Option<&[usize]> {
        match &self.witness {
            Witness::Vertices(v) => Some(v),
            Witness::Colouring(_) => None,
        }
    }

    /// `{parameter, value, witness, nodes, ms}`; `witness` is null when omitted.
    pub fn to_json(&self, with_witness: bool) -> serde_json::Value {
        serde_json::json!({
            "parameter": self.parameter,
            "value": self.value,
            "witness": if with_witness { serde_json::to_value(&self.witness).unwrap() } else { serde_json::Value::Null },
            "nodes": self.stats.nodes,
            "ms": self.stats.ms,
        })
    }
}

pub(crate) fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Outcome of the `alpha * omega == n` identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct GodsilCheck {
    pub alpha: usize,
    pub omega: usize,
    pub n: usize,
    pub report: Report,
}

/// Checks the arithmetic identity `alpha(G) * omega(G) = n`. Vertex
/// transitivity, which the identity presupposes, is not tested.
pub fn godsil_identity_check(g: &Graph, budget: &mut Budget) -> Result<GodsilCheck, SolveError> {
    let omega = max_clique(g, budget)?.value;
    let alpha = max_clique(&complement(g), budget)?.value;
    let mut b = Report::builder(0.0);
    let residual = (alpha * omega).abs_diff(g.n()) as f64;
    b.record(ConstraintKind::Identity, &[], None, residual);
    Ok(GodsilCheck {
        alpha,
        omega,
        n: g.n(),
        report: b.finish(),
    })
}
