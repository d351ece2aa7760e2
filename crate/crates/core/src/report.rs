//! Structured pass/fail results shared by every verifier.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Which constraint a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// An edge whose endpoints share a colour (classical colouring).
    MonochromaticEdge,
    /// A source edge not mapped onto a target edge (homomorphism).
    EdgeNotPreserved,
    /// `U_v` is not unitary.
    Unitarity,
    /// A diagonal entry of `U_v^† U_w` on an edge is nonzero.
    EdgeOrthogonality,
    /// A POVM or projector element is not Hermitian.
    Hermiticity,
    /// A projector is not idempotent.
    Idempotency,
    /// A POVM element has a negative eigenvalue.
    Positivity,
    /// The elements at a vertex do not sum to the identity.
    Completeness,
    /// The shared state is not normalized.
    StateNorm,
    /// `<psi| E_{v,a} (x) F_{v,b} |psi>` is nonzero for `a != b`.
    SameVertexConsistency,
    /// `<psi| E_{v,a} (x) F_{w,a} |psi>` is nonzero on an edge.
    EdgeConsistency,
    /// An arithmetic identity between graph parameters does not hold.
    Identity,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ConstraintKind,
    /// One vertex, or the two endpoints of an edge.
    pub vertices: Vec<usize>,
    /// Colour pair involved, when the constraint is colour-specific.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours: Option<(usize, usize)>,
    pub residual: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        match self.vertices.as_slice() {
            [v] => write!(f, " at vertex {v}")?,
            [v, w] => write!(f, " on edge ({v},{w})")?,
            vs => write!(f, " at {vs:?}")?,
        }
        if let Some((a, b)) = self.colours {
            write!(f, " colours ({a},{b})")?;
        }
        write!(f, " residual {:.3e}", self.residual)
    }
}

/// Verification outcome. `pass` holds exactly when `worst_residual <= tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub violations: Vec<Violation>,
}

impl Report {
    /// Tracks residuals against `tolerance`; call [`ReportBuilder::finish`] to
    /// get the sorted report.
    pub fn builder(tolerance: f64) -> ReportBuilder {
        ReportBuilder {
            tolerance,
            worst: 0.0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.pass
    }

    /// Appends the other report's violations; the tolerance of `self` stays in force.
    pub fn merge(mut self, other: Report) -> Report {
        let mut b = Report::builder(self.tolerance);
        b.worst = self.worst_residual.max(other.worst_residual);
        self.violations.extend(other.violations);
        b.violations = self.violations;
        b.finish()
    }
}

pub struct ReportBuilder {
    tolerance: f64,
    worst: f64,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    /// Records a residual; a violation is stored only when it exceeds the tolerance.
    pub fn record(&mut self, kind: ConstraintKind, vertices: &[usize], colours: Option<(usize, usize)>, residual: f64) {
        // Non-finite residuals count as failures and must stay JSON-representable.
        let residual = if residual.is_finite() { residual } else { f64::MAX };
        if residual > self.worst {
            self.worst = residual;
        }
        if residual > self.tolerance {
            self.violations.push(Violation {
                kind,
                vertices: vertices.to_vec(),
                colours,
                residual,
            });
        }
    }

    pub fn finish(mut self) -> Report {
        self.violations.sort_by(|a, b| {
            (a.kind, &a.vertices, a.colours)
                .cmp(&(b.kind, &b.vertices, b.colours))
                .then(a.residual.total_cmp(&b.residual))
        });
        Report {
            pass: self.worst <= self.tolerance,
            worst_residual: self.worst,
            tolerance: self.tolerance,
            violations: self.violations,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (worst residual {:.3e}, tolerance {:.1e}, {} violation(s))",
            if self.pass { "PASS" } else { "FAIL" },
            self.worst_residual,
            self.tolerance,
            self.violations.len()
        )?;
        for v in self.violations.iter().take(20) {
            writeln!(f, "  {v}")?;
        }
        if self.violations.len() > 20 {
            writeln!(f, "  ... {} more", self.violations.len() - 20)?;
        }
        Ok(())
    }
}
