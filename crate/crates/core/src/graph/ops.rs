use super::{ClassicalColouring, Graph, GraphError};
use crate::report::{ConstraintKind, Report};

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let rows = (0..n)
        .map(|v| {
            let mut r = g.neighbours(v).complement();
            r.remove(v);
            r
        })
        .collect();
    Graph::from_rows(rows)
}

/// Graph on the common vertex set whose edge set is the union of both.
pub fn union_same_vertices(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() != h.n() {
        return Err(GraphError::VertexCountMismatch(g.n(), h.n()));
    }
    let rows = (0..g.n())
        .map(|v| {
            let mut r = g.neighbours(v).clone();
            r.union_with(h.neighbours(v));
            r
        })
        .collect();
    Ok(Graph::from_rows(rows))
}

/// Checks that `map` sends every edge of `source` onto an edge of `target`.
/// The report lists each violating source edge.
pub fn check_homomorphism(source: &Graph, target: &Graph, map: &[usize]) -> Result<Report, GraphError> {
    if map.len() != source.n() {
        return Err(GraphError::MapLength {
            expected: source.n(),
            found: map.len(),
        });
    }
    if let Some((vertex, &image)) = map.iter().enumerate().find(|(_, &x)| x >= target.n()) {
        return Err(GraphError::MapOutOfRange {
            vertex,
            image,
            target_n: target.n(),
        });
    }
    let mut b = Report::builder(0.0);
    for (u, v) in source.edges() {
        let ok = target.has_edge(map[u], map[v]);
        b.record(
            ConstraintKind::EdgeNotPreserved,
            &[u, v],
            None,
            if ok { 0.0 } else { 1.0 },
        );
    }
    Ok(b.finish())
}

/// Passes iff every edge is bichromatic; the report lists monochromatic edges.
pub fn verify_proper_colouring(g: &Graph, col: &ClassicalColouring) -> Result<Report, GraphError> {
    if col.len() != g.n() {
        return Err(GraphError::ColouringLength {
            expected: g.n(),
            found: col.len(),
        });
    }
    let mut b = Report::builder(0.0);
    for (u, v) in g.edges() {
        let same = col.colour(u) == col.colour(v);
        let k = col.colour(u);
        b.record(
            ConstraintKind::MonochromaticEdge,
            &[u, v],
            Some((k, col.colour(v))),
            if same { 1.0 } else { 0.0 },
        );
    }
    Ok(b.finish())
}
