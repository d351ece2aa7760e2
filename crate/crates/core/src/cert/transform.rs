use super::{
    verify, verify_general, verify_projector, verify_rank1, CertError, Certificate, GeneralCert,
    ProjectiveMeasurements, ProjectorCert, Rank1Cert, PERM_ONE, PERM_ZERO, RANK_REL_TOL,
};
use crate::graph::{union_same_vertices, verify_proper_colouring, ClassicalColouring, Graph, Homomorphism};
use crate::linalg::{conj, hermiticity_residual, identity, kron, max_abs, outer, support, CMat};
use num_complex::Complex64;
use serde::Serialize;

fn require_pass(report: crate::report::Report) -> Result<(), CertError> {
    if report.pass {
        Ok(())
    } else {
        Err(CertError::Precondition(Box::new(report)))
    }
}

/// Vertex `x` of the source graph receives the operators of `hom(x)`.
/// The certificate must pass on the target graph.
pub fn pullback(hom: &Homomorphism, cert: &Certificate, tol: f64) -> Result<Certificate, CertError> {
    require_pass(verify(hom.target(), cert, tol)?)?;
    let map = hom.map();
    Ok(match cert {
        Certificate::Rank1(c) => Rank1Cert::new(c.c(), map.iter().map(|&y| c.unitary(y).clone()).collect())?.into(),
        Certificate::Projector(c) => {
            ProjectorCert::new(c.c(), c.r(), map.iter().map(|&y| c.projectors()[y].clone()).collect())?.into()
        }
        Certificate::General(c) => GeneralCert::new(
            c.c(),
            c.da(),
            c.db(),
            c.state().clone(),
            map.iter().map(|&y| c.alice()[y].clone()).collect(),
            map.iter().map(|&y| c.bob()[y].clone()).collect(),
        )?
        .into(),
    })
}

/// Certificate for `G u H` on a shared vertex set: colour `(a, b)` becomes
/// index `a * c_H + b` with operator `E_{v,a} (x) E'_{v,b}`.
pub fn tensor_union(
    g: &Graph,
    cert_g: &ProjectorCert,
    h: &Graph,
    cert_h: &ProjectorCert,
    tol: f64,
) -> Result<(Graph, ProjectorCert), CertError> {
    if g.n() != h.n() {
        return Err(CertError::VertexCount {
            expected: g.n(),
            found: h.n(),
        });
    }
    require_pass(verify_projector(g, cert_g, tol)?)?;
    require_pass(verify_projector(h, cert_h, tol)?)?;
    let union = union_same_vertices(g, h)?;
    let (cg, ch) = (cert_g.c(), cert_h.c());
    let projectors = (0..g.n())
        .map(|v| {
            (0..cg * ch)
                .map(|k| kron(cert_g.projector(v, k / ch), cert_h.projector(v, k % ch)))
                .collect()
        })
        .collect();
    let cert = ProjectorCert::new(cg * ch, cert_g.r() * cert_h.r(), projectors)?;
    let report = verify_projector(&union, &cert, tol)?;
    if !report.pass {
        return Err(CertError::SelfCheck(Box::new(report)));
    }
    Ok((union, cert))
}

/// Column `a` of `U_v` becomes the rank-1 projector `|e_{v,a}><e_{v,a}|`.
pub fn rank1_to_projector(cert: &Rank1Cert) -> Result<ProjectorCert, CertError> {
    let c = cert.c();
    let projectors = cert
        .unitaries()
        .iter()
        .map(|u| (0..c).map(|a| outer(&u.column(a).into_owned())).collect())
        .collect();
    ProjectorCert::new(c, 1, projectors)
}

/// `E'_{v,a} = sum_i E_{v,a+i mod c} (x) |i><i|`: every output projector has
/// rank `d` on `C^(d c)`. Each input measurement must be projective and
/// complete within `tol`.
pub fn equalize_ranks(pm: &ProjectiveMeasurements, tol: f64) -> Result<ProjectorCert, CertError> {
    let (c, d) = (pm.c(), pm.d());
    let id = identity(d);
    for (vertex, family) in pm.projectors().iter().enumerate() {
        let mut sum = CMat::zeros(d, d);
        let mut residual: f64 = 0.0;
        for e in family {
            residual = residual.max(hermiticity_residual(e)).max(max_abs(&(e * e - e)));
            sum += e;
        }
        residual = residual.max(max_abs(&(sum - &id)));
        if residual > tol {
            return Err(CertError::IncompleteMeasurement { vertex, residual });
        }
    }
    let diag: Vec<CMat> = (0..c)
        .map(|i| {
            let mut m = CMat::zeros(c, c);
            m[(i, i)] = Complex64::new(1.0, 0.0);
            m
        })
        .collect();
    let projectors = pm
        .projectors()
        .iter()
        .map(|family| {
            (0..c)
                .map(|a| {
                    (0..c).fold(CMat::zeros(d * c, d * c), |acc, i| {
                        acc + kron(&family[(a + i) % c], &diag[i])
                    })
                })
                .collect()
        })
        .collect();
    ProjectorCert::new(c, d, projectors)
}

/// Diagnostics from [`normal_form`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalFormReport {
    /// Number of Schmidt coefficients kept.
    pub schmidt_rank: usize,
    /// `max |F_new - conj(E_new)|` over all vertices and colours.
    pub conj_residual: f64,
    /// `max |rho E_new - E_new rho|` with `rho` Alice's reduced state.
    pub commutation_residual: f64,
    /// Whether rank equalization was needed (output dimension grew by `c`).
    pub equalized: bool,
    /// `"original"` when the state had full Schmidt rank on Alice's side,
    /// otherwise `"schmidt"` (operators restricted to the Schmidt support).
    pub coordinates: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub cert: ProjectorCert,
    pub report: NormalFormReport,
}

/// Replaces a passing general certificate by an equivalent projective one
/// used with a maximally entangled state.
///
/// The state is written as `sum_k s_k |u_k> |b_k>`; Schmidt coefficients with
/// `s_k^2 <= RANK_REL_TOL * max s^2` are dropped and all operators restricted
/// to the remaining support. With `rho = diag(s^2)` Alice's new projectors are
/// `supp(sqrt(rho) F^T sqrt(rho))` and Bob's are `supp(sqrt(rho) E^T sqrt(rho))`;
/// the latter must be the conjugates of the former within `tol`.
pub fn normal_form(g: &Graph, cert: &GeneralCert, tol: f64) -> Result<NormalForm, CertError> {
    require_pass(verify_general(g, cert, tol)?)?;
    let svd = cert.state_matrix().svd(true, true);
    let u = svd.u.expect("svd computes u");
    let v_t = svd.v_t.expect("svd computes v_t");
    let lambda: Vec<f64> = svd.singular_values.iter().map(|s| s * s).collect();
    let lmax = lambda.iter().copied().fold(0.0, f64::max);
    let threshold = RANK_REL_TOL * lmax;
    if lambda.iter().any(|&l| l > threshold / 10.0 && l < threshold * 10.0) {
        return Err(CertError::AmbiguousSchmidtRank);
    }
    let keep: Vec<usize> = (0..lambda.len()).filter(|&k| lambda[k] > threshold).collect();
    let m = keep.len();
    let a = CMat::from_fn(cert.da(), m, |i, k| u[(i, keep[k])]);
    let b = CMat::from_fn(cert.db(), m, |j, k| v_t[(keep[k], j)]);
    let sqrt_rho = CMat::from_fn(m, m, |i, k| {
        if i == k {
            Complex64::new(lambda[keep[i]].sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let rho = &sqrt_rho * &sqrt_rho;

    let c = cert.c();
    let mut alice = Vec::with_capacity(cert.len());
    let mut conj_residual: f64 = 0.0;
    let mut commutation_residual: f64 = 0.0;
    for v in 0..cert.len() {
        let mut family = Vec::with_capacity(c);
        for colour in 0..c {
            let e_res = a.adjoint() * &cert.alice()[v][colour] * &a;
            let f_res = b.adjoint() * &cert.bob()[v][colour] * &b;
            let e_new = support(&(&sqrt_rho * f_res.transpose() * &sqrt_rho), threshold);
            let f_new = support(&(&sqrt_rho * e_res.transpose() * &sqrt_rho), threshold);
            if e_new.ambiguous || f_new.ambiguous {
                return Err(CertError::AmbiguousRank { vertex: v, colour });
            }
            conj_residual = conj_residual.max(max_abs(&(&f_new.projector - conj(&e_new.projector))));
            commutation_residual =
                commutation_residual.max(max_abs(&(&rho * &e_new.projector - &e_new.projector * &rho)));
            family.push(e_new.projector);
        }
        alice.push(family);
    }
    if conj_residual > tol {
        return Err(CertError::ConsistencyFailure(conj_residual));
    }
    let original = m == cert.da();
    if original {
        for family in alice.iter_mut() {
            for e in family.iter_mut() {
                *e = &a * &*e * a.adjoint();
            }
        }
    }
    let ranks: Vec<usize> = alice.iter().flatten().map(crate::linalg::projector_rank).collect();
    let equal = ranks.iter().all(|&r| r == ranks[0]);
    let (out, equalized) = if equal && ranks[0] * c == m {
        (ProjectorCert::new(c, ranks[0], alice)?, false)
    } else {
        (equalize_ranks(&ProjectiveMeasurements::new(c, m, alice)?, tol)?, true)
    };
    let check = verify_projector(g, &out, tol)?;
    if !check.pass {
        return Err(CertError::SelfCheck(Box::new(check)));
    }
    Ok(NormalForm {
        cert: out,
        report: NormalFormReport {
            schmidt_rank: m,
            conj_residual,
            commutation_residual,
            equalized,
            coordinates: if original { "original" } else { "schmidt" },
        },
    })
}

/// Classical 3-colouring from a passing 3-colour rank-1 certificate on a
/// connected graph. After the gauge `U_v -> U_0^† U_v` every unitary must be a
/// phased permutation; the colour of `v` is the row holding the nonzero entry
/// of column 0.
pub fn extract_classical_3col(g: &Graph, cert: &Rank1Cert, tol: f64) -> Result<ClassicalColouring, CertError> {
    if cert.c() != 3 {
        return Err(CertError::WrongColourCount {
            expected: 3,
            found: cert.c(),
        });
    }
    if !g.is_connected() {
        return Err(CertError::Disconnected);
    }
    require_pass(verify_rank1(g, cert, tol)?)?;
    let u0_adj = cert.unitary(0).adjoint();
    let mut colours = Vec::with_capacity(g.n());
    for vertex in 0..g.n() {
        let p = &u0_adj * cert.unitary(vertex);
        let mut row_hits = [0usize; 3];
        let mut col_hits = [0usize; 3];
        for row in 0..3 {
            for col in 0..3 {
                let modulus = p[(row, col)].norm();
                if modulus >= PERM_ONE {
                    row_hits[row] += 1;
                    col_hits[col] += 1;
                } else if modulus > PERM_ZERO {
                    return Err(CertError::NumericalNoise {
                        vertex,
                        row,
                        col,
                        modulus,
                    });
                }
            }
        }
        if row_hits.iter().chain(&col_hits).any(|&h| h != 1) {
            return Err(CertError::NotPhasedPermutation { vertex });
        }
        let colour = (0..3)
            .find(|&row| p[(row, 0)].norm() >= PERM_ONE)
            .expect("column 0 has one hit");
        colours.push(colour);
    }
    let col = ClassicalColouring::new(3, colours)?;
    let report = verify_proper_colouring(g, &col)?;
    if !report.pass {
        return Err(CertError::ImproperColouring(Box::new(report)));
    }
    Ok(col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::{classical_to_rank1, embed_rank1_general, DEFAULT_TOL};
    use crate::graph::{complement, complete_graph, cycle_graph};
    use crate::linalg::{c, fourier, CVec};

    fn cyclic_shift(n: usize, verts: usize) -> ProjectorCert {
        let projectors = (0..verts)
            .map(|v| {
                (0..n)
                    .map(|a| {
                        let mut e = CMat::zeros(n, n);
                        e[(((a + v) % n), ((a + v) % n))] = c(1.0, 0.0);
                        e
                    })
                    .collect()
            })
            .collect();
        ProjectorCert::new(n, 1, projectors).unwrap()
    }

    #[test]
    fn pullback_identity_and_embedding() {
        let k4 = complete_graph(4).unwrap();
        let cert: Certificate = cyclic_shift(4, 4).into();
        let id = Homomorphism::identity(&k4);
        assert_eq!(pullback(&id, &cert, DEFAULT_TOL).unwrap(), cert);

        let k3 = complete_graph(3).unwrap();
        let emb = Homomorphism::new(k3.clone(), k4, vec![0, 1, 2]).unwrap();
        let pulled = pullback(&emb, &cert, DEFAULT_TOL).unwrap();
        assert_eq!(pulled.c(), 4);
        assert!(verify(&k3, &pulled, DEFAULT_TOL).unwrap().pass);
    }

    #[test]
    fn pullback_through_colouring() {
        let g = cycle_graph(7).unwrap();
        let col = ClassicalColouring::new(3, vec![0, 1, 0, 1, 0, 1, 2]).unwrap();
        let hom = Homomorphism::from_colouring(&g, &col).unwrap();
        let pulled = pullback(&hom, &cyclic_shift(3, 3).into(), DEFAULT_TOL).unwrap();
        assert!(verify(&g, &pulled, DEFAULT_TOL).unwrap().pass);
    }

    #[test]
    fn tensor_union_examples() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let h = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let cg = rank1_to_projector(
            &classical_to_rank1(&g, &ClassicalColouring::new(2, vec![0, 1, 0, 1]).unwrap()).unwrap(),
        )
        .unwrap();
        let ch = rank1_to_projector(
            &classical_to_rank1(&h, &ClassicalColouring::new(2, vec![0, 0, 1, 1]).unwrap()).unwrap(),
        )
        .unwrap();
        let (u, cert) = tensor_union(&g, &cg, &h, &ch, DEFAULT_TOL).unwrap();
        assert_eq!((cert.c(), cert.r(), u.edge_count()), (4, 1, 4));

        // trivial one-colour certificate on the edgeless side
        let empty = Graph::edgeless(4).unwrap();
        let trivial = ProjectorCert::new(1, 1, vec![vec![identity(1)]; 4]).unwrap();
        let (u, cert) = tensor_union(&g, &cg, &empty, &trivial, DEFAULT_TOL).unwrap();
        assert_eq!(u, g);
        assert_eq!(cert, cg);

        // a graph and its complement cover K_4
        let p = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let pc = complement(&p);
        let cp = cyclic_shift(2, 4);
        let cp = ProjectorCert::new(2, 1, (0..4).map(|v| cp.projectors()[v % 2].clone()).collect()).unwrap();
        let cpc = rank1_to_projector(
            &classical_to_rank1(&pc, &ClassicalColouring::new(2, vec![0, 0, 1, 1]).unwrap()).unwrap(),
        )
        .unwrap();
        assert!(verify_projector(&pc, &cpc, DEFAULT_TOL).unwrap().pass);
        let (u, cert) = tensor_union(&p, &cp, &pc, &cpc, DEFAULT_TOL).unwrap();
        assert_eq!(u, complete_graph(4).unwrap());
        assert!(cert.c() >= 4);
    }

    #[test]
    fn equalize_ranks_examples() {
        let k2 = complete_graph(2).unwrap();
        let p = rank1_to_projector(&classical_to_rank1(&k2, &ClassicalColouring::new(2, vec![0, 1]).unwrap()).unwrap())
            .unwrap();
        let eq = equalize_ranks(&p.into(), DEFAULT_TOL).unwrap();
        assert_eq!((eq.r(), eq.d()), (2, 4));
        assert!(verify_projector(&k2, &eq, DEFAULT_TOL).unwrap().pass);

        let diag = |entries: &[f64]| CMat::from_diagonal(&CVec::from_iterator(3, entries.iter().map(|&x| c(x, 0.0))));
        let mixed =
            ProjectiveMeasurements::new(2, 3, vec![vec![diag(&[1.0, 0.0, 0.0]), diag(&[0.0, 1.0, 1.0])]]).unwrap();
        let eq = equalize_ranks(&mixed, DEFAULT_TOL).unwrap();
        assert_eq!((eq.r(), eq.d()), (3, 6));
        assert!(
            verify_projector(&Graph::edgeless(1).unwrap(), &eq, DEFAULT_TOL)
                .unwrap()
                .pass
        );

        let incomplete =
            ProjectiveMeasurements::new(2, 3, vec![vec![diag(&[1.0, 0.0, 0.0]), diag(&[0.0, 1.0, 0.0])]]).unwrap();
        assert!(matches!(
            equalize_ranks(&incomplete, DEFAULT_TOL),
            Err(CertError::IncompleteMeasurement { vertex: 0, .. })
        ));
    }

    #[test]
    fn normal_form_of_embedded_rank1() {
        let g = cycle_graph(5).unwrap();
        let r1 = classical_to_rank1(&g, &ClassicalColouring::new(3, vec![0, 1, 0, 1, 2]).unwrap()).unwrap();
        let nf = normal_form(&g, &embed_rank1_general(&r1).unwrap(), DEFAULT_TOL).unwrap();
        let lift = rank1_to_projector(&r1).unwrap();
        assert_eq!(nf.report.coordinates, "original");
        assert!(!nf.report.equalized);
        assert!(nf.report.commutation_residual < 1e-12);
        for v in 0..5 {
            for a in 0..3 {
                assert!(max_abs(&(nf.cert.projector(v, a) - lift.projector(v, a))) < 1e-9);
            }
        }
    }

    #[test]
    fn normal_form_non_maximal_state_single_vertex() {
        let (p, q) = (0.8f64.sqrt(), 0.2f64.sqrt());
        let state = CVec::from_vec(vec![c(p, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(q, 0.0)]);
        let e0 = CMat::from_diagonal(&CVec::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]));
        let e1 = identity(2) - &e0;
        let fam = vec![e0.clone(), e1.clone()];
        let g = Graph::edgeless(1).unwrap();
        let cert = GeneralCert::new(2, 2, 2, state, vec![fam.clone()], vec![fam]).unwrap();
        let nf = normal_form(&g, &cert, DEFAULT_TOL).unwrap();
        assert!(max_abs(&(nf.cert.projector(0, 0) - e0)) < 1e-12);
        assert!(max_abs(&(nf.cert.projector(0, 1) - e1)) < 1e-12);
        assert!(nf.report.conj_residual < 1e-12);
    }

    #[test]
    fn normal_form_restricts_to_schmidt_support() {
        // Phi_2 padded into 3 x 3 dimensions; Schmidt rank 2 < dA
        let s = 0.5f64.sqrt();
        let mut state = CVec::zeros(9);
        state[0] = c(s, 0.0);
        state[4] = c(s, 0.0);
        let f = fourier(2);
        let pad = |m: &CMat| {
            let mut out = CMat::zeros(3, 3);
            out.view_mut((0, 0), (2, 2)).copy_from(m);
            out
        };
        let mut extra = CMat::zeros(3, 3);
        extra[(2, 2)] = c(1.0, 0.0);
        let fam_a: Vec<CMat> = (0..2)
            .map(|a| pad(&outer(&f.column(a).into_owned())) + if a == 0 { extra.clone() } else { CMat::zeros(3, 3) })
            .collect();
        let fam_b: Vec<CMat> = fam_a.iter().map(conj).collect();
        let g = Graph::edgeless(1).unwrap();
        let cert = GeneralCert::new(2, 3, 3, state, vec![fam_a], vec![fam_b]).unwrap();
        let nf = normal_form(&g, &cert, DEFAULT_TOL).unwrap();
        assert_eq!(nf.report.schmidt_rank, 2);
        assert_eq!(nf.report.coordinates, "schmidt");
        assert_eq!(nf.cert.d(), 2);
    }

    #[test]
    fn normal_form_rejects_failing_input() {
        let k2 = complete_graph(2).unwrap();
        let r1 = Rank1Cert::new(2, vec![identity(2), identity(2)]).unwrap();
        match normal_form(&k2, &embed_rank1_general(&r1).unwrap(), DEFAULT_TOL) {
            Err(CertError::Precondition(r)) => assert!(!r.violations.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn extract_three_colourings() {
        let c5 = cycle_graph(5).unwrap();
        let col = ClassicalColouring::new(3, vec![0, 1, 0, 1, 2]).unwrap();
        let got = extract_classical_3col(&c5, &classical_to_rank1(&c5, &col).unwrap(), DEFAULT_TOL).unwrap();
        assert!(got.equivalent_up_to_palette(&col));

        let k3 = complete_graph(3).unwrap();
        let id = ClassicalColouring::new(3, vec![0, 1, 2]).unwrap();
        let got = extract_classical_3col(&k3, &classical_to_rank1(&k3, &id).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(got.used_colours(), 3);

        let k2 = complete_graph(2).unwrap();
        let two = ClassicalColouring::new(3, vec![0, 2]).unwrap();
        let got = extract_classical_3col(&k2, &classical_to_rank1(&k2, &two).unwrap(), DEFAULT_TOL).unwrap();
        assert!(verify_proper_colouring(&k2, &got).unwrap().pass);
    }

    #[test]
    fn extract_errors() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let col = ClassicalColouring::new(3, vec![0, 1, 0]).unwrap();
        let cert = classical_to_rank1(&g, &col).unwrap();
        assert_eq!(
            extract_classical_3col(&g, &cert, DEFAULT_TOL),
            Err(CertError::Disconnected)
        );
        let k2 = complete_graph(2).unwrap();
        let cert = classical_to_rank1(&k2, &ClassicalColouring::new(2, vec![0, 1]).unwrap()).unwrap();
        assert!(matches!(
            extract_classical_3col(&k2, &cert, DEFAULT_TOL),
            Err(CertError::WrongColourCount { .. })
        ));
        let single = Graph::edgeless(1).unwrap();
        assert!(extract_classical_3col(&single, &Rank1Cert::new(3, vec![fourier(3)]).unwrap(), DEFAULT_TOL).is_ok());
        let f = fourier(3);
        let bad = Rank1Cert::new(3, vec![identity(3), f]).unwrap();
        assert!(matches!(
            extract_classical_3col(&k2, &bad, DEFAULT_TOL),
            Err(CertError::Precondition(_))
        ));
        // cyclic shift times a small rotation: passes a loose tolerance but is not a clean phased permutation
        let eps: f64 = 1e-5;
        let mut rot = identity(3);
        rot[(0, 0)] = c(eps.cos(), 0.0);
        rot[(0, 1)] = c(-eps.sin(), 0.0);
        rot[(1, 0)] = c(eps.sin(), 0.0);
        rot[(1, 1)] = c(eps.cos(), 0.0);
        let shift = CMat::from_fn(3, 3, |i, k| if i == (k + 1) % 3 { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let noisy = Rank1Cert::new(3, vec![identity(3), shift * rot]).unwrap();
        assert!(matches!(
            extract_classical_3col(&k2, &noisy, 1e-4),
            Err(CertError::NumericalNoise { vertex: 1, .. })
        ));
    }
}
