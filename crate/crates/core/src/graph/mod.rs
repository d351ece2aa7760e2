//! Finite simple undirected graphs on vertices `0..n`.

mod generate;
pub mod io;
mod ops;

pub use generate::{complete_graph, cycle_graph, gnp, PRNG_ALGORITHM};
pub use ops::{check_homomorphism, complement, union_same_vertices, verify_proper_colouring};

use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0},{1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("map has length {found}, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("map sends vertex {vertex} to {image}, outside the target's {target_n} vertices")]
    MapOutOfRange {
        vertex: usize,
        image: usize,
        target_n: usize,
    },
    #[error("colour {colour} at vertex {vertex} is not below the colour count {c}")]
    ColourOutOfRange { vertex: usize, colour: usize, c: usize },
    #[error("colouring has {found} entries but the graph has {expected} vertices")]
    ColouringLength { expected: usize, found: usize },
    #[error("colour count must be at least 1")]
    NoColours,
    #[error("edge probability {0} outside [0,1]")]
    Probability(f64),
    #[error("map is not a homomorphism: {0} edge(s) not preserved")]
    NotHomomorphism(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
    #[error("{0}")]
    Invalid(String),
}

/// Simple graph with bitset adjacency rows (constant-time adjacency tests).
///
/// Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<BitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse into one edge; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut rows = vec![BitSet::new(n); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !rows[u].contains(v) {
                rows[u].insert(v);
                rows[v].insert(u);
                m += 1;
            }
        }
        Ok(Graph { rows, m })
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    /// Builds from a symmetric adjacency predicate evaluated on `u < v`.
    pub(crate) fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut rows = vec![BitSet::new(n); n];
        let mut m = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                    m += 1;
                }
            }
        }
        Ok(Graph { rows, m })
    }

    pub(crate) fn from_rows(rows: Vec<BitSet>) -> Self {
        let m = rows.iter().map(BitSet::count).sum::<usize>() / 2;
        Graph { rows, m }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = BitSet::new(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.rows[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.count() == n
    }

    /// True when every pair in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex colouring with colours in `0..c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColouringRepr")]
pub struct ClassicalColouring {
    c: usize,
    colours: Vec<usize>,
}

#[derive(Deserialize)]
struct ColouringRepr {
    c: usize,
    colours: Vec<usize>,
}

impl TryFrom<ColouringRepr> for ClassicalColouring {
    type Error = GraphError;
    fn try_from(r: ColouringRepr) -> Result<Self, GraphError> {
        ClassicalColouring::new(r.c, r.colours)
    }
}

impl ClassicalColouring {
    pub fn new(c: usize, colours: Vec<usize>) -> Result<Self, GraphError> {
        if c == 0 {
            return Err(GraphError::NoColours);
        }
        if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &k)| k >= c) {
            return Err(GraphError::ColourOutOfRange { vertex, colour, c });
        }
        Ok(ClassicalColouring { c, colours })
    }

    /// Colour count is one more than the largest colour used.
    pub fn from_colours(colours: Vec<usize>) -> Result<Self, GraphError> {
        let c = colours.iter().max().map_or(1, |m| m + 1);
        ClassicalColouring::new(c, colours)
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn used_colours(&self) -> usize {
        let mut seen = vec![false; self.c];
        for &k in &self.colours {
            seen[k] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }

    /// Same colouring with a different (larger or equal) palette size.
    pub fn with_palette(&self, c: usize) -> Result<Self, GraphError> {
        ClassicalColouring::new(c, self.colours.clone())
    }

    /// True when `other` equals `self` after a bijective relabelling of colours.
    pub fn equivalent_up_to_palette(&self, other: &ClassicalColouring) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut fwd = std::collections::HashMap::new();
        let mut back = std::collections::HashMap::new();
        for (&a, &b) in self.colours.iter().zip(&other.colours) {
            if *fwd.entry(a).or_insert(b) != b || *back.entry(b).or_insert(a) != a {
                return false;
            }
        }
        true
    }
}

/// Edge-preserving vertex map `source -> target`, validated on construction.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self, GraphError> {
        let report = check_homomorphism(&source, &target, &map)?;
        if !report.pass {
            return Err(GraphError::NotHomomorphism(report.violations.len()));
        }
        Ok(Homomorphism { source, target, map })
    }

    /// `G -> K_c` given by a proper colouring.
    pub fn from_colouring(g: &Graph, col: &ClassicalColouring) -> Result<Self, GraphError> {
        let target = complete_graph(col.c())?;
        Homomorphism::new(g.clone(), target, col.colours().to_vec())
    }

    pub fn identity(g: &Graph) -> Self {
        Homomorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.n()).collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
