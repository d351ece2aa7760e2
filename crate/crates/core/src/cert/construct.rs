use super::od::{od4, od8};
use super::{verify_rank1, CertError, GeneralCert, Rank1Cert, DEFAULT_TOL};
use crate::graph::{verify_proper_colouring, ClassicalColouring, Graph};
use crate::linalg::{conj, fourier, outer, CMat, CVec};
use crate::vecrep::{inner_product, VectorRep, Vectors};
use num_complex::Complex64;
use std::f64::consts::PI;

fn self_checked(g: &Graph, cert: Rank1Cert) -> Result<Rank1Cert, CertError> {
    let report = verify_rank1(g, &cert, DEFAULT_TOL)?;
    if !report.pass {
        return Err(CertError::SelfCheck(Box::new(report)));
    }
    Ok(cert)
}

/// `Delta_x F_c` for a vector `x` of unit-modulus entries.
fn phased_fourier(x: &[Complex64], f: &CMat) -> CMat {
    CMat::from_diagonal(&CVec::from_column_slice(x)) * f
}

fn check_edges_orthogonal(g: &Graph, rep: &VectorRep) -> Result<(), CertError> {
    if rep.len() != g.n() {
        return Err(CertError::VertexCount {
            expected: g.n(),
            found: rep.len(),
        });
    }
    for (u, v) in g.edges() {
        if !inner_product(rep, u, v)?.is_zero(DEFAULT_TOL) {
            return Err(CertError::NotOrthogonal(u, v));
        }
    }
    Ok(())
}

/// Colour `k` becomes the unit-modulus vector `x_j = exp(2 pi i jk / c)` and
/// the vertex gets `U_v = Delta_x F_c`.
pub fn classical_to_rank1(g: &Graph, col: &ClassicalColouring) -> Result<Rank1Cert, CertError> {
    let report = verify_proper_colouring(g, col)?;
    if !report.pass {
        return Err(CertError::ImproperColouring(Box::new(report)));
    }
    let c = col.c();
    let f = fourier(c);
    let lifts: Vec<CMat> = (0..c)
        .map(|k| {
            let x: Vec<Complex64> = (0..c)
                .map(|j| Complex64::from_polar(1.0, 2.0 * PI * ((j * k) % c) as f64 / c as f64))
                .collect();
            phased_fourier(&x, &f)
        })
        .collect();
    let unitaries = col.colours().iter().map(|&k| lifts[k].clone()).collect();
    self_checked(g, Rank1Cert::new(c, unitaries)?)
}

/// `U_v = Delta_x F_c` with `x` the vertex's vector rescaled to unit-modulus
/// entries. Requires constant-modulus entries and orthogonality on edges.
pub fn unit_modulus_rep_to_rank1(g: &Graph, rep: &VectorRep) -> Result<Rank1Cert, CertError> {
    check_edges_orthogonal(g, rep)?;
    let c = rep.dim();
    let f = fourier(c);
    let mut unitaries = Vec::with_capacity(rep.len());
    for v in 0..rep.len() {
        let x = rep.complex_vector(v);
        let r = x[0].norm();
        if r == 0.0 || x.iter().any(|e| (e.norm() - r).abs() > DEFAULT_TOL * r.max(1.0)) {
            return Err(CertError::NotUnitModulus(v));
        }
        let unit: Vec<Complex64> = x.iter().map(|e| e / e.norm()).collect();
        unitaries.push(phased_fourier(&unit, &f));
    }
    self_checked(g, Rank1Cert::new(c, unitaries)?)
}

/// Pads each real vector with zeros to length 4 (dimension up to 4) or 8
/// (dimension 5 to 8), normalizes it, and uses the orthogonal design matrix
/// as `U_v`.
pub fn real_rep_to_rank1_od(g: &Graph, rep: &VectorRep) -> Result<Rank1Cert, CertError> {
    if !rep.is_real() {
        return Err(CertError::NotReal);
    }
    let dim = rep.dim();
    if dim > 8 {
        return Err(CertError::DimensionTooLarge(dim));
    }
    check_edges_orthogonal(g, rep)?;
    let design = if dim <= 4 { od4() } else { od8() };
    let n = design.order();
    let mut unitaries = Vec::with_capacity(rep.len());
    for v in 0..rep.len() {
        let mut x: Vec<f64> = rep.complex_vector(v).iter().map(|z| z.re).collect();
        x.resize(n, 0.0);
        let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(CertError::Rep(crate::vecrep::RepError::ZeroVector(v)));
        }
        x.iter_mut().for_each(|e| *e /= norm);
        let m = design.instantiate(&x);
        unitaries.push(CMat::from_fn(n, n, |i, j| Complex64::new(m[i][j], 0.0)));
    }
    self_checked(g, Rank1Cert::new(n, unitaries)?)
}

/// First column of each `U_v`, as a float representation of dimension `c`.
pub fn rank1_to_rep(cert: &Rank1Cert) -> Result<VectorRep, CertError> {
    let vectors = cert
        .unitaries()
        .iter()
        .map(|u| u.column(0).iter().copied().collect())
        .collect();
    Ok(VectorRep::new(cert.c(), Vectors::Float(vectors))?)
}

/// The same strategy as a general certificate: maximally entangled state of
/// rank `c`, `E_{v,a} = |e_{v,a}><e_{v,a}|` and `F_{v,a} = conj(E_{v,a})`.
pub fn embed_rank1_general(cert: &Rank1Cert) -> Result<GeneralCert, CertError> {
    let c = cert.c();
    let s = 1.0 / (c as f64).sqrt();
    let state = CVec::from_fn(c * c, |k, _| {
        if k / c == k % c {
            Complex64::new(s, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let alice: Vec<Vec<CMat>> = cert
        .unitaries()
        .iter()
        .map(|u| (0..c).map(|a| outer(&u.column(a).into_owned())).collect())
        .collect();
    let bob = alice.iter().map(|fam| fam.iter().map(conj).collect()).collect();
    GeneralCert::new(c, c, c, state, alice, bob)
}

/// `(1 + 2 sqrt 2)^(2k)`, the classical colour bound attached to a vector
/// chromatic number `k`.
pub fn upper_bound_report(k: u32) -> Result<f64, CertError> {
    if k == 0 {
        return Err(CertError::ZeroK);
    }
    if k > 100 {
        return Err(CertError::Overflow(k));
    }
    Ok((1.0 + 2.0 * 2f64.sqrt()).powi(2 * k as i32))
}
