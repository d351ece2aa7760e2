//! Graph file formats.
//!
//! DIMACS: `c` comment lines, one `p edge n m` header, then `e u v` lines with
//! 1-indexed vertices. JSON: `{"n": int, "edges": [[u, v], ...]}`, 0-indexed.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |msg: &str| GraphError::Parse {
            line: line_no,
            msg: msg.to_owned(),
        };
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let kind = tok.next().ok_or_else(|| err("missing format in problem line"))?;
                if kind != "edge" && kind != "col" {
                    return Err(err("expected `p edge n m`"));
                }
                let n = parse_num(tok.next(), line_no)?;
                let m = parse_num(tok.next(), line_no)?;
                if n == 0 {
                    return Err(GraphError::Empty);
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge before problem line"))?;
                let u = parse_num(tok.next(), line_no)?;
                let v = parse_num(tok.next(), line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(&format!("vertex out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(&format!("unknown line type `{other}`"))),
            None => {}
        }
    }
    let (n, _) = header.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `p edge n m` line".into(),
    })?;
    Graph::new(n, edges)
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize, GraphError> {
    let t = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: "missing number".into(),
    })?;
    t.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("`{t}` is not a non-negative integer"),
    })
}

/// Writes edges in sorted order, 1-indexed.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Serde mirror of the JSON graph format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Graph, GraphError> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    Graph::try_from(j)
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json")
}

/// Accepts either format: JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs(text)
    }
}
