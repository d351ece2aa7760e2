//! Vector families over exact and floating backends, orthogonality graphs,
//! and the concrete vector constructions (Hadamard, roots of unity, datasets).
//!
//! Exact backends never touch floating point when deciding orthogonality.
//! The float backend compares `|<x, y>|` against an absolute tolerance
//! ([`DEFAULT_FLOAT_TOL`] unless overridden); orthogonality graphs built from
//! float vectors are sensitive to that choice.

pub mod cyclotomic;
mod datasets;
mod generate;
pub mod io;

pub use datasets::{dim4_paper_colouring, g18_dataset, DatasetError};
pub use generate::{
    fourth_roots_dim4_graph, hadamard_graph, hadamard_rep, roots_of_unity_colouring, roots_of_unity_graph,
    roots_of_unity_independent_set, MAX_HADAMARD_N, MAX_ROOTS_P,
};

use crate::graph::{Graph, GraphError};
use cyclotomic::{is_prime, CyclotomicField, RootSum};
use num_complex::{Complex, Complex64};
use std::f64::consts::PI;
use thiserror::Error;

pub type GaussInt = Complex<i64>;

pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum RepError {
    #[error("vector {0} is zero")]
    ZeroVector(usize),
    #[error("vector {0} has a non-finite entry")]
    NotFinite(usize),
    #[error("vector {index} has length {found}, expected {dim}")]
    DimensionMismatch { index: usize, dim: usize, found: usize },
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(Backend, Backend),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("exponent {exp} at vector {index} is not below the order {order}")]
    ExponentOutOfRange { index: usize, exp: u32, order: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{what} = {value} exceeds the size guard {max}")]
    TooLarge { what: &'static str, value: u32, max: u32 },
    #[error("Hadamard graph needs even n; n = {0} gives an edgeless graph")]
    OddHadamard(u32),
    #[error("representation is empty")]
    Empty,
    #[error("{0}")]
    Invalid(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    IntegerReal,
    GaussianInteger,
    /// Entries are `exp(2 pi i e / m)` stored as exponents `e` in `0..m`.
    RootOfUnityExponent(u32),
    ComplexFloat,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::IntegerReal => f.write_str("int"),
            Backend::GaussianInteger => f.write_str("gauss"),
            Backend::RootOfUnityExponent(m) => write!(f, "rootexp({m})"),
            Backend::ComplexFloat => f.write_str("float"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Vectors {
    Int(Vec<Vec<i64>>),
    Gauss(Vec<Vec<GaussInt>>),
    RootExp { order: u32, vectors: Vec<Vec<u32>> },
    Float(Vec<Vec<Complex64>>),
}

impl Vectors {
    fn len(&self) -> usize {
        match self {
            Vectors::Int(v) => v.len(),
            Vectors::Gauss(v) => v.len(),
            Vectors::RootExp { vectors, .. } => vectors.len(),
            Vectors::Float(v) => v.len(),
        }
    }

    fn lengths(&self) -> Vec<usize> {
        match self {
            Vectors::Int(v) => v.iter().map(Vec::len).collect(),
            Vectors::Gauss(v) => v.iter().map(Vec::len).collect(),
            Vectors::RootExp { vectors, .. } => vectors.iter().map(Vec::len).collect(),
            Vectors::Float(v) => v.iter().map(Vec::len).collect(),
        }
    }
}

/// Vertex-indexed family of nonzero vectors of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorRep {
    dim: usize,
    vectors: Vectors,
}

/// Exact or floating inner product `<x, y>`, conjugate-linear in `x`.
#[derive(Clone, Debug, PartialEq)]
pub enum InnerProductValue {
    Int(i64),
    Gauss(GaussInt),
    RootSum(RootSum),
    Float(Complex64),
}

impl InnerProductValue {
    /// Exact for exact backends; `|value| <= tol` for floats.
    pub fn is_zero(&self, tol: f64) -> bool {
        match self {
            InnerProductValue::Int(v) => *v == 0,
            InnerProductValue::Gauss(z) => z.re == 0 && z.im == 0,
            InnerProductValue::RootSum(s) => s.is_zero(),
            InnerProductValue::Float(z) => z.norm() <= tol,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            InnerProductValue::Int(v) => Complex64::new(*v as f64, 0.0),
            InnerProductValue::Gauss(z) => Complex64::new(z.re as f64, z.im as f64),
            InnerProductValue::RootSum(s) => s.to_complex(),
            InnerProductValue::Float(z) => *z,
        }
    }
}

impl VectorRep {
    /// Validates equal lengths, nonzero vectors, finite floats and exponent range.
    pub fn new(dim: usize, vectors: Vectors) -> Result<Self, RepError> {
        if vectors.len() == 0 {
            return Err(RepError::Empty);
        }
        if let Some((index, &found)) = vectors.lengths().iter().enumerate().find(|(_, &l)| l != dim) {
            return Err(RepError::DimensionMismatch { index, dim, found });
        }
        match &vectors {
            Vectors::Int(vs) => {
                if let Some(i) = vs.iter().position(|v| v.iter().all(|&e| e == 0)) {
                    return Err(RepError::ZeroVector(i));
                }
            }
            Vectors::Gauss(vs) => {
                if let Some(i) = vs.iter().position(|v| v.iter().all(|e| e.re == 0 && e.im == 0)) {
                    return Err(RepError::ZeroVector(i));
                }
            }
            Vectors::RootExp { order, vectors: vs } => {
                if *order == 0 {
                    return Err(RepError::Parse("root-of-unity order must be positive".into()));
                }
                if dim == 0 {
                    return Err(RepError::ZeroVector(0));
                }
                for (index, v) in vs.iter().enumerate() {
                    if let Some(&exp) = v.iter().find(|&&e| e >= *order) {
                        return Err(RepError::ExponentOutOfRange {
                            index,
                            exp,
                            order: *order,
                        });
                    }
                }
            }
            Vectors::Float(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if v.iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
                        return Err(RepError::NotFinite(i));
                    }
                    if v.iter().all(|e| e.re == 0.0 && e.im == 0.0) {
                        return Err(RepError::ZeroVector(i));
                    }
                }
            }
        }
        Ok(VectorRep { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vectors(&self) -> &Vectors {
        &self.vectors
    }

    pub fn backend(&self) -> Backend {
        match &self.vectors {
            Vectors::Int(_) => Backend::IntegerReal,
            Vectors::Gauss(_) => Backend::GaussianInteger,
            Vectors::RootExp { order, .. } => Backend::RootOfUnityExponent(*order),
            Vectors::Float(_) => Backend::ComplexFloat,
        }
    }

    /// Real-valued backends: integers, or floats with zero imaginary parts.
    pub fn is_real(&self) -> bool {
        match &self.vectors {
            Vectors::Int(_) => true,
            Vectors::Gauss(vs) => vs.iter().flatten().all(|z| z.im == 0),
            Vectors::RootExp { order, vectors } => vectors.iter().flatten().all(|&e| 2 * e % order == 0),
            Vectors::Float(vs) => vs.iter().flatten().all(|z| z.im == 0.0),
        }
    }

    /// Vector `v` as complex floats.
    pub fn complex_vector(&self, v: usize) -> Vec<Complex64> {
        match &self.vectors {
            Vectors::Int(vs) => vs[v].iter().map(|&e| Complex64::new(e as f64, 0.0)).collect(),
            Vectors::Gauss(vs) => vs[v].iter().map(|z| Complex64::new(z.re as f64, z.im as f64)).collect(),
            Vectors::RootExp { order, vectors } => vectors[v]
                .iter()
                .map(|&e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / *order as f64))
                .collect(),
            Vectors::Float(vs) => vs[v].clone(),
        }
    }

    /// Same vectors on the float backend.
    pub fn to_float(&self) -> VectorRep {
        VectorRep {
            dim: self.dim,
            vectors: Vectors::Float((0..self.len()).map(|v| self.complex_vector(v)).collect()),
        }
    }

    /// Does every vector have entries of one common modulus (per vector)?
    /// Exact for exact backends; floats compare moduli within `tol`.
    pub fn has_constant_modulus_entries(&self, tol: f64) -> bool {
        match &self.vectors {
            Vectors::Int(vs) => vs.iter().all(|v| v.iter().all(|e| e.abs() == v[0].abs() && *e != 0)),
            Vectors::Gauss(vs) => vs
                .iter()
                .all(|v| v.iter().all(|e| e.norm_sqr() == v[0].norm_sqr() && e.norm_sqr() != 0)),
            Vectors::RootExp { .. } => true,
            Vectors::Float(vs) => vs.iter().all(|v| {
                let r = v[0].norm();
                r > tol && v.iter().all(|e| (e.norm() - r).abs() <= tol)
            }),
        }
    }
}

fn check_index(rep: &VectorRep, v: usize) -> Result<(), RepError> {
    if v < rep.len() {
        Ok(())
    } else {
        Err(RepError::VertexOutOfRange(v))
    }
}

/// `<rep[x], rep[y]> = sum_i conj(x_i) y_i`.
pub fn inner_product(rep: &VectorRep, x: usize, y: usize) -> Result<InnerProductValue, RepError> {
    cross_inner_product(rep, x, rep, y)
}

/// Inner product of vectors drawn from two representations with the same backend.
pub fn cross_inner_product(a: &VectorRep, x: usize, b: &VectorRep, y: usize) -> Result<InnerProductValue, RepError> {
    check_index(a, x)?;
    check_index(b, y)?;
    if a.backend() != b.backend() {
        return Err(RepError::BackendMismatch(a.backend(), b.backend()));
    }
    if a.dim != b.dim {
        return Err(RepError::DimensionMismatch {
            index: y,
            dim: a.dim,
            found: b.dim,
        });
    }
    Ok(match (&a.vectors, &b.vectors) {
        (Vectors::Int(u), Vectors::Int(v)) => InnerProductValue::Int(u[x].iter().zip(&v[y]).map(|(p, q)| p * q).sum()),
        (Vectors::Gauss(u), Vectors::Gauss(v)) => {
            InnerProductValue::Gauss(u[x].iter().zip(&v[y]).map(|(p, q)| p.conj() * q).sum())
        }
        (Vectors::RootExp { order, vectors: u }, Vectors::RootExp { vectors: v, .. }) => InnerProductValue::RootSum(
            RootSum::from_exponents(*order, exponent_difference(*order, &u[x], &v[y])),
        ),
        (Vectors::Float(u), Vectors::Float(v)) => {
            InnerProductValue::Float(u[x].iter().zip(&v[y]).map(|(p, q)| p.conj() * q).sum())
        }
        _ => unreachable!("backends checked equal"),
    })
}

/// Exponents of the entrywise product `conj(x) o y`.
fn exponent_difference<'a>(order: u32, x: &'a [u32], y: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
    x.iter().zip(y).map(move |(&a, &b)| (b + order - a) % order)
}

/// For prime `p` and dimension `p`: `<x, y> = 0` iff the exponents of
/// `conj(x) o y` are pairwise distinct, i.e. a permutation of `0..p`.
pub fn rootexp_orthogonal_by_distinctness(p: u32, x: &[u32], y: &[u32]) -> bool {
    let mut seen = vec![false; p as usize];
    exponent_difference(p, x, y).all(|d| !std::mem::replace(&mut seen[d as usize], true))
}

/// Vertex per vector, edge iff orthogonal. `tol` applies to the float backend only.
pub fn orthogonality_graph(rep: &VectorRep, tol: f64) -> Result<Graph, RepError> {
    let n = rep.len();
    match &rep.vectors {
        Vectors::RootExp { order, vectors } if is_prime(*order) && rep.dim == *order as usize => {
            let p = *order;
            Ok(Graph::from_predicate(n, |u, v| {
                rootexp_orthogonal_by_distinctness(p, &vectors[u], &vectors[v])
            })?)
        }
        Vectors::RootExp { order, vectors } => {
            let field = CyclotomicField::new(*order);
            Ok(Graph::from_predicate(n, |u, v| {
                let s = RootSum::from_exponents(*order, exponent_difference(*order, &vectors[u], &vectors[v]));
                field.is_zero(&s.coeffs)
            })?)
        }
        _ => {
            let mut err = None;
            let g = Graph::from_predicate(n, |u, v| match inner_product(rep, u, v) {
                Ok(ip) => ip.is_zero(tol),
                Err(e) => {
                    err.get_or_insert(e);
                    false
                }
            })?;
            match err {
                Some(e) => Err(e),
                None => Ok(g),
            }
        }
    }
}

/// True when every edge of `g` joins orthogonal vectors of `rep`.
pub fn is_orthogonal_representation(g: &Graph, rep: &VectorRep, tol: f64) -> Result<bool, RepError> {
    if rep.len() != g.n() {
        return Err(RepError::DimensionMismatch {
            index: 0,
            dim: g.n(),
            found: rep.len(),
        });
    }
    for (u, v) in g.edges() {
        if !inner_product(rep, u, v)?.is_zero(tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn self_inner_product_is_positive() {
        let rep = VectorRep::new(2, Vectors::Gauss(vec![vec![gi(1, 0), gi(0, 1)]])).unwrap();
        assert_eq!(inner_product(&rep, 0, 0).unwrap(), InnerProductValue::Gauss(gi(2, 0)));
        assert!(!inner_product(&rep, 0, 0).unwrap().is_zero(0.0));
    }

    #[test]
    fn cube_roots_orthogonal() {
        let rep = VectorRep::new(
            3,
            Vectors::RootExp {
                order: 3,
                vectors: vec![vec![0, 0, 0], vec![0, 1, 2]],
            },
        )
        .unwrap();
        assert!(inner_product(&rep, 0, 1).unwrap().is_zero(0.0));
        assert!(rootexp_orthogonal_by_distinctness(3, &[0, 0, 0], &[0, 1, 2]));
    }

    #[test]
    fn gaussian_pair_matches_float_oracle() {
        // (1, i) vs (1, -i): evaluated independently with plain f64 complex arithmetic.
        let x = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
        let y = [Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)];
        let oracle: Complex64 = x.iter().zip(&y).map(|(a, b)| a.conj() * b).sum();
        assert!(oracle.norm() < 1e-15);

        let rep = VectorRep::new(
            2,
            Vectors::Gauss(vec![vec![gi(1, 0), gi(0, 1)], vec![gi(1, 0), gi(0, -1)]]),
        )
        .unwrap();
        let exact = inner_product(&rep, 0, 1).unwrap();
        assert_eq!(exact, InnerProductValue::Gauss(gi(0, 0)));
        assert_eq!(exact.to_complex(), oracle);
    }

    #[test]
    fn standard_basis_gives_complete_graph() {
        let rep = VectorRep::new(3, Vectors::Int(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        assert_eq!(orthogonality_graph(&rep, 0.0).unwrap(), complete_graph(3).unwrap());
    }

    #[test]
    fn proportional_vectors_are_twins() {
        let rep = VectorRep::new(
            2,
            Vectors::Gauss(vec![
                vec![gi(1, 0), gi(1, 0)],
                vec![gi(0, 1), gi(0, 1)],
                vec![gi(1, 0), gi(-1, 0)],
            ]),
        )
        .unwrap();
        let g = orthogonality_graph(&rep, 0.0).unwrap();
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.neighbours(0), g.neighbours(1));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            VectorRep::new(2, Vectors::Int(vec![vec![0, 0]])),
            Err(RepError::ZeroVector(0))
        );
        assert!(matches!(
            VectorRep::new(2, Vectors::Int(vec![vec![1, 0, 0]])),
            Err(RepError::DimensionMismatch { .. })
        ));
        assert_eq!(
            VectorRep::new(1, Vectors::Float(vec![vec![Complex64::new(f64::NAN, 0.0)]])),
            Err(RepError::NotFinite(0))
        );
        assert!(matches!(
            VectorRep::new(
                2,
                Vectors::RootExp {
                    order: 3,
                    vectors: vec![vec![0, 3]]
                }
            ),
            Err(RepError::ExponentOutOfRange { .. })
        ));
        let a = VectorRep::new(1, Vectors::Int(vec![vec![1]])).unwrap();
        let b = a.to_float();
        assert!(matches!(
            cross_inner_product(&a, 0, &b, 0),
            Err(RepError::BackendMismatch(..))
        ));
        assert_eq!(inner_product(&a, 0, 1), Err(RepError::VertexOutOfRange(1)));
    }

    #[test]
    fn float_tolerance_controls_adjacency() {
        let rep = VectorRep::new(
            2,
            Vectors::Float(vec![
                vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                vec![Complex64::new(1e-8, 0.0), Complex64::new(1.0, 0.0)],
            ]),
        )
        .unwrap();
        assert_eq!(orthogonality_graph(&rep, 1e-9).unwrap().edge_count(), 0);
        assert_eq!(orthogonality_graph(&rep, 1e-7).unwrap().edge_count(), 1);
    }

    #[test]
    fn rootexp_composite_order_uses_exact_reduction() {
        // order 4 in dimension 2: (1, 1) and (1, -1) are orthogonal.
        let rep = VectorRep::new(
            2,
            Vectors::RootExp {
                order: 4,
                vectors: vec![vec![0, 0], vec![0, 2], vec![0, 1]],
            },
        )
        .unwrap();
        let g = orthogonality_graph(&rep, 0.0).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
