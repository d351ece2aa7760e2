//! Quantum-colouring certificates in three tiers and their verifiers.
//!
//! * [`Rank1Cert`]: one `c x c` unitary per vertex; column `a` is Alice's
//!   basis vector for colour `a`. Bob's vectors are the complex conjugates and
//!   the shared state is the maximally entangled state of rank `c`.
//! * [`ProjectorCert`]: per vertex, `c` projectors of equal rank `r` on
//!   `C^(r c)`, used with a maximally entangled state.
//! * [`GeneralCert`]: an arbitrary pure state on `C^dA (x) C^dB` with one
//!   `c`-outcome POVM per vertex on each side.
//!
//! Constructors check shapes only. Whether a certificate actually wins the
//! colouring game is decided by the `verify_*` functions, so deliberately
//! broken certificates can be built and rejected.

mod construct;
pub mod json;
pub mod od;
mod transform;
mod verify;

pub use construct::{
    classical_to_rank1, embed_rank1_general, rank1_to_rep, real_rep_to_rank1_od, unit_modulus_rep_to_rank1,
    upper_bound_report,
};
pub use transform::{
    equalize_ranks, extract_classical_3col, normal_form, pullback, rank1_to_projector, tensor_union, NormalForm,
    NormalFormReport,
};
pub use verify::{verify, verify_general, verify_projector, verify_rank1};

use crate::graph::GraphError;
use crate::linalg::{CMat, CVec};
use crate::report::Report;
use crate::vecrep::RepError;
use thiserror::Error;

/// Absolute tolerance for unitarity and orthogonality residuals.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Support extraction keeps eigenvalues above this multiple of the largest one.
pub const RANK_REL_TOL: f64 = 1e-8;
/// Largest matrix dimension accepted in a certificate.
pub const MAX_DIM: usize = 256;
/// Entry modulus at or above which a phased-permutation entry counts as nonzero.
pub const PERM_ONE: f64 = 0.99;
/// Entry modulus at or below which a phased-permutation entry counts as zero.
pub const PERM_ZERO: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum CertError {
    #[error("certificate covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("malformed certificate: {0}")]
    Shape(String),
    #[error("dimension {0} exceeds the cap of {MAX_DIM}")]
    DimensionCap(usize),
    #[error("projector ({vertex},{colour}) has rank {found}, declared rank {expected}")]
    RankMismatch {
        vertex: usize,
        colour: usize,
        expected: usize,
        found: usize,
    },
    #[error("colouring is not proper ({} monochromatic edge(s))", .0.violations.len())]
    ImproperColouring(Box<Report>),
    #[error("vector {0} does not have constant-modulus entries")]
    NotUnitModulus(usize),
    #[error("vectors {0} and {1} are adjacent but not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("representation is not real")]
    NotReal,
    #[error("dimension {0} is above 8; no real orthogonal design exists")]
    DimensionTooLarge(usize),
    #[error("precondition failed: input certificate does not verify\n{0}")]
    Precondition(Box<Report>),
    #[error(
        "numerically ambiguous rank at vertex {vertex} colour {colour}: an eigenvalue lies within 10x of the threshold"
    )]
    AmbiguousRank { vertex: usize, colour: usize },
    #[error("state restriction has ambiguous Schmidt rank")]
    AmbiguousSchmidtRank,
    #[error("Bob's operators differ from the conjugates of Alice's by {0:.3e}")]
    ConsistencyFailure(f64),
    #[error("measurement at vertex {vertex} is incomplete or not projective (residual {residual:.3e})")]
    IncompleteMeasurement { vertex: usize, residual: f64 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("expected {expected} colours, certificate has {found}")]
    WrongColourCount { expected: usize, found: usize },
    #[error("gauge-fixed unitary at vertex {vertex} is not a phased permutation")]
    NotPhasedPermutation { vertex: usize },
    #[error(
        "entry ({row},{col}) of gauge-fixed unitary at vertex {vertex} has modulus {modulus:.3e}, between zero and one"
    )]
    NumericalNoise {
        vertex: usize,
        row: usize,
        col: usize,
        modulus: f64,
    },
    #[error("(1 + 2 sqrt 2)^(2k) overflows the reported range for k = {0} > 100")]
    Overflow(u32),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("construction produced a certificate that fails verification\n{0}")]
    SelfCheck(Box<Report>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("json: {0}")]
    Json(String),
}

fn check_square(m: &CMat, n: usize, what: &str) -> Result<(), CertError> {
    if m.shape() != (n, n) {
        return Err(CertError::Shape(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

fn check_dim(d: usize) -> Result<(), CertError> {
    if d == 0 {
        return Err(CertError::Shape("dimension must be positive".into()));
    }
    if d > MAX_DIM {
        return Err(CertError::DimensionCap(d));
    }
    Ok(())
}

fn check_families(families: &[Vec<CMat>], c: usize, d: usize, side: &str) -> Result<(), CertError> {
    for (v, fam) in families.iter().enumerate() {
        if fam.len() != c {
            return Err(CertError::Shape(format!(
                "{side} vertex {v} has {} operators, expected {c}",
                fam.len()
            )));
        }
        for (a, m) in fam.iter().enumerate() {
            check_square(m, d, &format!("{side} operator ({v},{a})"))?;
        }
    }
    Ok(())
}

/// Rank-1 certificate: unitary `U_v` per vertex, columns `|e_{v,a}>`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rank1Cert {
    c: usize,
    unitaries: Vec<CMat>,
}

impl Rank1Cert {
    pub fn new(c: usize, unitaries: Vec<CMat>) -> Result<Self, CertError> {
        check_dim(c)?;
        for (v, u) in unitaries.iter().enumerate() {
            check_square(u, c, &format!("U_{v}"))?;
        }
        Ok(Rank1Cert { c, unitaries })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn unitaries(&self) -> &[CMat] {
        &self.unitaries
    }

    pub fn unitary(&self, v: usize) -> &CMat {
        &self.unitaries[v]
    }

    pub fn len(&self) -> usize {
        self.unitaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unitaries.is_empty()
    }

    /// Applies `f` to every unitary (gauge transformations, tampering in tests).
    pub fn map_unitaries(&self, mut f: impl FnMut(usize, &CMat) -> CMat) -> Result<Self, CertError> {
        Rank1Cert::new(
            self.c,
            self.unitaries.iter().enumerate().map(|(v, u)| f(v, u)).collect(),
        )
    }
}

/// Rank-`r` projective certificate on `C^(r c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorCert {
    c: usize,
    r: usize,
    projectors: Vec<Vec<CMat>>,
}

impl ProjectorCert {
    pub fn new(c: usize, r: usize, projectors: Vec<Vec<CMat>>) -> Result<Self, CertError> {
        if c == 0 || r == 0 {
            return Err(CertError::Shape("colour count and rank must be positive".into()));
        }
        check_dim(r * c)?;
        check_families(&projectors, c, r * c, "projector")?;
        Ok(ProjectorCert { c, r, projectors })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.r * self.c
    }

    pub fn projectors(&self) -> &[Vec<CMat>] {
        &self.projectors
    }

    pub fn projector(&self, v: usize, colour: usize) -> &CMat {
        &self.projectors[v][colour]
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }
}

/// Complete projective measurements with possibly unequal ranks, the input
/// of [`equalize_ranks`].
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveMeasurements {
    c: usize,
    d: usize,
    projectors: Vec<Vec<CMat>>,
}

impl ProjectiveMeasurements {
    pub fn new(c: usize, d: usize, projectors: Vec<Vec<CMat>>) -> Result<Self, CertError> {
        if c == 0 {
            return Err(CertError::Shape("colour count must be positive".into()));
        }
        check_dim(d)?;
        check_dim(d * c)?;
        check_families(&projectors, c, d, "projector")?;
        Ok(ProjectiveMeasurements { c, d, projectors })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn projectors(&self) -> &[Vec<CMat>] {
        &self.projectors
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }
}

impl From<ProjectorCert> for ProjectiveMeasurements {
    fn from(p: ProjectorCert) -> Self {
        ProjectiveMeasurements {
            c: p.c,
            d: p.d(),
            projectors: p.projectors,
        }
    }
}

/// Pure state `|psi>` on `C^dA (x) C^dB` (index `i * dB + j`) and per-vertex
/// `c`-outcome POVMs for each side.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralCert {
    c: usize,
    da: usize,
    db: usize,
    state: CVec,
    alice: Vec<Vec<CMat>>,
    bob: Vec<Vec<CMat>>,
}

impl GeneralCert {
    pub fn new(
        c: usize,
        da: usize,
        db: usize,
        state: CVec,
        alice: Vec<Vec<CMat>>,
        bob: Vec<Vec<CMat>>,
    ) -> Result<Self, CertError> {
        if c == 0 {
            return Err(CertError::Shape("colour count must be positive".into()));
        }
        check_dim(da)?;
        check_dim(db)?;
        if state.len() != da * db {
            return Err(CertError::Shape(format!(
                "state has dimension {}, expected dA*dB = {}",
                state.len(),
                da * db
            )));
        }
        if alice.len() != bob.len() {
            return Err(CertError::Shape(format!(
                "Alice has {} vertices, Bob has {}",
                alice.len(),
                bob.len()
            )));
        }
        check_families(&alice, c, da, "Alice")?;
        check_families(&bob, c, db, "Bob")?;
        Ok(GeneralCert {
            c,
            da,
            db,
            state,
            alice,
            bob,
        })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn da(&self) -> usize {
        self.da
    }

    pub fn db(&self) -> usize {
        self.db
    }

    pub fn state(&self) -> &CVec {
        &self.state
    }

    pub fn alice(&self) -> &[Vec<CMat>] {
        &self.alice
    }

    pub fn bob(&self) -> &[Vec<CMat>] {
        &self.bob
    }

    pub fn len(&self) -> usize {
        self.alice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alice.is_empty()
    }

    /// `|psi>` as the `dA x dB` coefficient matrix.
    pub(crate) fn state_matrix(&self) -> CMat {
        CMat::from_fn(self.da, self.db, |i, j| self.state[i * self.db + j])
    }
}

/// Any of the three certificate tiers.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Rank1(Rank1Cert),
    Projector(ProjectorCert),
    General(GeneralCert),
}

impl Certificate {
    pub fn c(&self) -> usize {
        match self {
            Certificate::Rank1(x) => x.c(),
            Certificate::Projector(x) => x.c(),
            Certificate::General(x) => x.c(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Certificate::Rank1(x) => x.len(),
            Certificate::Projector(x) => x.len(),
            Certificate::General(x) => x.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Rank1(_) => "rank1",
            Certificate::Projector(_) => "projector",
            Certificate::General(_) => "general",
        }
    }
}

impl From<Rank1Cert> for Certificate {
    fn from(c: Rank1Cert) -> Self {
        Certificate::Rank1(c)
    }
}

impl From<ProjectorCert> for Certificate {
    fn from(c: ProjectorCert) -> Self {
        Certificate::Projector(c)
    }
}

impl From<GeneralCert> for Certificate {
    fn from(c: GeneralCert) -> Self {
        Certificate::General(c)
    }
}
