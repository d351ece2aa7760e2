//! JSON vector files:
//! `{"dim": int, "backend": "gauss"|"rootexp"|"int"|"float", "order": int?, "vectors": [[entry, ...], ...]}`.
//! Gaussian and float entries are `[re, im]` pairs, root exponents and
//! integers are plain numbers. `order` is required for `rootexp`.

use super::{GaussInt, RepError, VectorRep, Vectors};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
struct VectorFile {
    dim: usize,
    backend: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<u32>,
    vectors: Value,
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, RepError> {
    serde_json::from_value(v).map_err(|e| RepError::Parse(e.to_string()))
}

pub fn parse_vectors_json(text: &str) -> Result<VectorRep, RepError> {
    let f: VectorFile = serde_json::from_str(text).map_err(|e| RepError::Parse(e.to_string()))?;
    let vectors = match f.backend.as_str() {
        "int" => Vectors::Int(decode(f.vectors)?),
        "gauss" => {
            let raw: Vec<Vec<[i64; 2]>> = decode(f.vectors)?;
            Vectors::Gauss(
                raw.into_iter()
                    .map(|v| v.into_iter().map(|[re, im]| GaussInt::new(re, im)).collect())
                    .collect(),
            )
        }
        "rootexp" => {
            let order = f
                .order
                .ok_or_else(|| RepError::Parse("rootexp backend requires `order`".into()))?;
            Vectors::RootExp {
                order,
                vectors: decode(f.vectors)?,
            }
        }
        "float" => {
            let raw: Vec<Vec<[f64; 2]>> = decode(f.vectors)?;
            Vectors::Float(
                raw.into_iter()
                    .map(|v| v.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
                    .collect(),
            )
        }
        other => return Err(RepError::Parse(format!("unknown backend `{other}`"))),
    };
    VectorRep::new(f.dim, vectors)
}

pub fn write_vectors_json(rep: &VectorRep) -> String {
    let (backend, order, vectors) = match rep.vectors() {
        Vectors::Int(vs) => ("int", None, serde_json::to_value(vs)),
        Vectors::Gauss(vs) => (
            "gauss",
            None,
            serde_json::to_value(
                vs.iter()
                    .map(|v| v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            ),
        ),
        Vectors::RootExp { order, vectors } => ("rootexp", Some(*order), serde_json::to_value(vectors)),
        Vectors::Float(vs) => (
            "float",
            None,
            serde_json::to_value(
                vs.iter()
                    .map(|v| v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            ),
        ),
    };
    serde_json::to_string(&VectorFile {
        dim: rep.dim(),
        backend: backend.into(),
        order,
        vectors: vectors.expect("vectors serialize"),
    })
    .expect("vector file serializes")
}
