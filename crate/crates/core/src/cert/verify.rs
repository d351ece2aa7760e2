use super::{CertError, Certificate, GeneralCert, ProjectorCert, Rank1Cert};
use crate::graph::Graph;
use crate::linalg::{
    hermitian_eigen, hermiticity_residual, identity, max_abs, projector_rank, unitarity_residual, CMat,
};
use crate::report::{ConstraintKind, Report};
use num_complex::Complex64;

fn check_cover(g: &Graph, found: usize) -> Result<(), CertError> {
    if found != g.n() {
        return Err(CertError::VertexCount { expected: g.n(), found });
    }
    Ok(())
}

/// Every `U_v` unitary and `(U_v^† U_w)_{aa} = 0` on every edge `vw`.
pub fn verify_rank1(g: &Graph, cert: &Rank1Cert, tol: f64) -> Result<Report, CertError> {
    check_cover(g, cert.len())?;
    let mut b = Report::builder(tol);
    for (v, u) in cert.unitaries().iter().enumerate() {
        b.record(ConstraintKind::Unitarity, &[v], None, unitarity_residual(u));
    }
    for (v, w) in g.edges() {
        let m = cert.unitary(v).adjoint() * cert.unitary(w);
        for a in 0..cert.c() {
            b.record(
                ConstraintKind::EdgeOrthogonality,
                &[v, w],
                Some((a, a)),
                m[(a, a)].norm(),
            );
        }
    }
    Ok(b.finish())
}

/// Hermitian, idempotent, rank `r`, complete per vertex and `E_{v,a} E_{w,a} = 0`
/// on every edge. A projector (within `tol`) of the wrong rank is an error
/// rather than a violation.
pub fn verify_projector(g: &Graph, cert: &ProjectorCert, tol: f64) -> Result<Report, CertError> {
    check_cover(g, cert.len())?;
    let d = cert.d();
    let id = identity(d);
    let mut b = Report::builder(tol);
    for (v, family) in cert.projectors().iter().enumerate() {
        let mut sum = CMat::zeros(d, d);
        for (a, e) in family.iter().enumerate() {
            let herm = hermiticity_residual(e);
            let idem = max_abs(&(e * e - e));
            b.record(ConstraintKind::Hermiticity, &[v], Some((a, a)), herm);
            b.record(ConstraintKind::Idempotency, &[v], Some((a, a)), idem);
            if herm <= tol && idem <= tol {
                let found = projector_rank(e);
                if found != cert.r() {
                    return Err(CertError::RankMismatch {
                        vertex: v,
                        colour: a,
                        expected: cert.r(),
                        found,
                    });
                }
            }
            sum += e;
        }
        b.record(ConstraintKind::Completeness, &[v], None, max_abs(&(sum - &id)));
    }
    for (v, w) in g.edges() {
        for a in 0..cert.c() {
            let prod = cert.projector(v, a) * cert.projector(w, a);
            b.record(ConstraintKind::EdgeOrthogonality, &[v, w], Some((a, a)), max_abs(&prod));
        }
    }
    Ok(b.finish())
}

/// `<psi| E (x) F |psi> = sum_{jl} M_{jl} F_{jl}` with `M = Psi^† E Psi`.
fn correlation(m: &CMat, f: &CMat) -> Complex64 {
    m.iter().zip(f.iter()).map(|(x, y)| x * y).sum()
}

fn record_povm(b: &mut crate::report::ReportBuilder, v: usize, family: &[CMat]) {
    let d = family[0].nrows();
    let mut sum = CMat::zeros(d, d);
    for (a, e) in family.iter().enumerate() {
        b.record(ConstraintKind::Hermiticity, &[v], Some((a, a)), hermiticity_residual(e));
        let min = hermitian_eigen(e).0.first().copied().unwrap_or(0.0);
        b.record(ConstraintKind::Positivity, &[v], Some((a, a)), (-min).max(0.0));
        sum += e;
    }
    b.record(ConstraintKind::Completeness, &[v], None, max_abs(&(sum - identity(d))));
}

/// State normalized, all elements positive and complete, and the consistency
/// conditions: no `a != b` outcome pair at one vertex, no equal outcomes across
/// an edge (checked in both orientations).
pub fn verify_general(g: &Graph, cert: &GeneralCert, tol: f64) -> Result<Report, CertError> {
    check_cover(g, cert.len())?;
    let mut b = Report::builder(tol);
    b.record(
        ConstraintKind::StateNorm,
        &[],
        None,
        (cert.state().norm_squared() - 1.0).abs(),
    );
    for v in 0..cert.len() {
        record_povm(&mut b, v, &cert.alice()[v]);
        record_povm(&mut b, v, &cert.bob()[v]);
    }
    let psi = cert.state_matrix();
    let psi_adj = psi.adjoint();
    let m: Vec<Vec<CMat>> = cert
        .alice()
        .iter()
        .map(|fam| fam.iter().map(|e| &psi_adj * e * &psi).collect())
        .collect();
    for (v, (mv, fv)) in m.iter().zip(cert.bob()).enumerate() {
        for (a, ma) in mv.iter().enumerate() {
            for (bb, f) in fv.iter().enumerate() {
                if a != bb {
                    let p = correlation(ma, f).norm();
                    b.record(ConstraintKind::SameVertexConsistency, &[v], Some((a, bb)), p);
                }
            }
        }
    }
    for (v, w) in g.edges() {
        for (x, y) in [(v, w), (w, v)] {
            for (a, (ma, f)) in m[x].iter().zip(&cert.bob()[y]).enumerate() {
                let p = correlation(ma, f).norm();
                b.record(ConstraintKind::EdgeConsistency, &[x, y], Some((a, a)), p);
            }
        }
    }
    Ok(b.finish())
}

/// Dispatches on the certificate tier.
pub fn verify(g: &Graph, cert: &Certificate, tol: f64) -> Result<Report, CertError> {
    match cert {
        Certificate::Rank1(c) => verify_rank1(g, c, tol),
        Certificate::Projector(c) => verify_projector(g, c, tol),
        Certificate::General(c) => verify_general(g, c, tol),
    }
}
