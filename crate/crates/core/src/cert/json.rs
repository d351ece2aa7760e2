//! Certificate files.
//!
//! ```text
//! {"kind": "rank1",     "c": 3,         "graph": G, "matrices": [U_0, U_1, ...]}
//! {"kind": "projector", "c": 3, "r": 1, "graph": G, "matrices": [[E_00, E_01, E_02], ...]}
//! {"kind": "general",   "c": 3, "dA": 3, "dB": 3, "graph": G, "state": [z, ...],
//!  "matrices": {"alice": [[E_00, ...], ...], "bob": [[F_00, ...], ...]}}
//! ```
//!
//! `G` is the JSON graph format, matrices are lists of rows and every complex
//! number is an `[re, im]` pair.

use super::{CertError, Certificate, GeneralCert, ProjectorCert, Rank1Cert};
use crate::graph::Graph;
use crate::linalg::{CMat, CVec};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

type JsonMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Serialize, Deserialize)]
struct Families {
    alice: Vec<Vec<JsonMatrix>>,
    bob: Vec<Vec<JsonMatrix>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum CertFile {
    Rank1 {
        c: usize,
        graph: Graph,
        matrices: Vec<JsonMatrix>,
    },
    Projector {
        c: usize,
        r: usize,
        graph: Graph,
        matrices: Vec<Vec<JsonMatrix>>,
    },
    General {
        c: usize,
        #[serde(rename = "dA")]
        da: usize,
        #[serde(rename = "dB")]
        db: usize,
        graph: Graph,
        state: Vec<[f64; 2]>,
        matrices: Families,
    },
}

fn to_json_matrix(m: &CMat) -> JsonMatrix {
    m.row_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn from_json_matrix(rows: &JsonMatrix) -> Result<CMat, CertError> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CertError::Shape("ragged matrix rows".into()));
    }
    if rows.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(CertError::Shape("non-finite matrix entry".into()));
    }
    Ok(CMat::from_fn(n, cols, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

fn families_to_json(f: &[Vec<CMat>]) -> Vec<Vec<JsonMatrix>> {
    f.iter().map(|fam| fam.iter().map(to_json_matrix).collect()).collect()
}

fn families_from_json(f: &[Vec<JsonMatrix>]) -> Result<Vec<Vec<CMat>>, CertError> {
    f.iter().map(|fam| fam.iter().map(from_json_matrix).collect()).collect()
}

pub fn write_certificate_json(g: &Graph, cert: &Certificate) -> String {
    let file = match cert {
        Certificate::Rank1(x) => CertFile::Rank1 {
            c: x.c(),
            graph: g.clone(),
            matrices: x.unitaries().iter().map(to_json_matrix).collect(),
        },
        Certificate::Projector(x) => CertFile::Projector {
            c: x.c(),
            r: x.r(),
            graph: g.clone(),
            matrices: families_to_json(x.projectors()),
        },
        Certificate::General(x) => CertFile::General {
            c: x.c(),
            da: x.da(),
            db: x.db(),
            graph: g.clone(),
            state: x.state().iter().map(|z| [z.re, z.im]).collect(),
            matrices: Families {
                alice: families_to_json(x.alice()),
                bob: families_to_json(x.bob()),
            },
        },
    };
    serde_json::to_string(&file).expect("certificate serializes")
}

/// Parses a certificate file and checks that it covers its graph.
pub fn parse_certificate_json(text: &str) -> Result<(Graph, Certificate), CertError> {
    let file: CertFile = serde_json::from_str(text).map_err(|e| CertError::Json(e.to_string()))?;
    let (g, cert): (Graph, Certificate) = match file {
        CertFile::Rank1 { c, graph, matrices } => {
            let us = matrices.iter().map(from_json_matrix).collect::<Result<_, _>>()?;
            (graph, Rank1Cert::new(c, us)?.into())
        }
        CertFile::Projector { c, r, graph, matrices } => {
            (graph, ProjectorCert::new(c, r, families_from_json(&matrices)?)?.into())
        }
        CertFile::General {
            c,
            da,
            db,
            graph,
            state,
            matrices,
        } => {
            if state.iter().flatten().any(|x| !x.is_finite()) {
                return Err(CertError::Shape("non-finite state entry".into()));
            }
            let psi = CVec::from_iterator(state.len(), state.iter().map(|&[re, im]| Complex64::new(re, im)));
            let alice = families_from_json(&matrices.alice)?;
            let bob = families_from_json(&matrices.bob)?;
            (graph, GeneralCert::new(c, da, db, psi, alice, bob)?.into())
        }
    };
    if cert.len() != g.n() {
        return Err(CertError::VertexCount {
            expected: g.n(),
            found: cert.len(),
        });
    }
    Ok((g, cert))
}
