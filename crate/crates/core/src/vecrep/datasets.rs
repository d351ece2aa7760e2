//! Checked-in datasets, verified against `data/SHA256SUMS` on every load.

use super::io::parse_vectors_json;
use super::{RepError, VectorRep};
use crate::graph::io::parse_dimacs;
use crate::graph::{ClassicalColouring, Graph};
use sha2::{Digest, Sha256};
use thiserror::Error;

const SUMS: &str = include_str!("../../data/SHA256SUMS");
const G18_DIMACS: &str = include_str!("../../data/g18.dimacs");
const G18_VECTORS: &str = include_str!("../../data/g18_vectors.json");
const DIM4_COLOURING: &str = include_str!("../../data/dim4_colouring.txt");

#[derive(Debug, Error, PartialEq)]
pub enum DatasetError {
    #[error("checksum mismatch for {file}: expected {expected}, got {found}")]
    Checksum {
        file: &'static str,
        expected: String,
        found: String,
    },
    #[error("no checksum recorded for {0}")]
    MissingChecksum(&'static str),
    #[error("{file}: {msg}")]
    Parse { file: &'static str, msg: String },
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn checked(file: &'static str, contents: &'static str) -> Result<&'static str, DatasetError> {
    let expected = SUMS
        .lines()
        .filter_map(|l| l.split_once("  "))
        .find(|(_, name)| name.trim() == file)
        .map(|(h, _)| h.trim().to_owned())
        .ok_or(DatasetError::MissingChecksum(file))?;
    let found = sha256_hex(contents.as_bytes());
    if found != expected {
        return Err(DatasetError::Checksum { file, expected, found });
    }
    Ok(contents)
}

/// The 18-vertex, 44-edge graph (0-indexed) with its integer vectors in `R^4`.
pub fn g18_dataset() -> Result<(Graph, VectorRep), DatasetError> {
    let edges = checked("g18.dimacs", G18_DIMACS)?;
    let vectors = checked("g18_vectors.json", G18_VECTORS)?;
    let g = parse_dimacs(edges).map_err(|e| DatasetError::Parse {
        file: "g18.dimacs",
        msg: e.to_string(),
    })?;
    let rep = parse_vectors_json(vectors).map_err(|e: RepError| DatasetError::Parse {
        file: "g18_vectors.json",
        msg: e.to_string(),
    })?;
    Ok((g, rep))
}

/// The 64-entry 4-colouring of the fourth-roots graph, shifted to colours `0..4`.
pub fn dim4_paper_colouring() -> Result<ClassicalColouring, DatasetError> {
    let text = checked("dim4_colouring.txt", DIM4_COLOURING)?;
    let err = |msg: String| DatasetError::Parse {
        file: "dim4_colouring.txt",
        msg,
    };
    let colours = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(err(format!("bad colour `{t}`"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if colours.len() != 64 {
        return Err(err(format!("expected 64 colours, found {}", colours.len())));
    }
    ClassicalColouring::new(4, colours).map_err(|e| err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vecrep::{is_orthogonal_representation, Vectors};

    #[test]
    fn g18_loads() {
        let (g, rep) = g18_dataset().unwrap();
        assert_eq!(g.n(), 18);
        assert_eq!(g.edge_count(), 44);
        let Vectors::Int(vs) = rep.vectors() else {
            panic!("int backend")
        };
        assert_eq!(vs[14], vec![1, 1, 1, 1]);
        assert!(is_orthogonal_representation(&g, &rep, 0.0).unwrap());
        // vertices 15..18 (1-indexed) form a clique
        assert!(g.is_clique(&[14, 15, 16, 17]));
    }

    #[test]
    fn checksum_detects_tampering() {
        assert!(checked("g18.dimacs", "p edge 18 0\n").is_err());
        assert_eq!(checked("nope.txt", ""), Err(DatasetError::MissingChecksum("nope.txt")));
    }

    #[test]
    fn dim4_colouring_loads() {
        let c = dim4_paper_colouring().unwrap();
        assert_eq!(c.len(), 64);
        assert_eq!(c.c(), 4);
        assert_eq!(&c.colours()[..4], &[0, 0, 0, 1]);
    }
}
