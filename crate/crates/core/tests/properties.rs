mod common;

use common::*;
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use qchrom::cert::json::{parse_certificate_json, write_certificate_json};
use qchrom::cert::{
    classical_to_rank1, rank1_to_projector, tensor_union, unit_modulus_rep_to_rank1, verify, verify_rank1, Certificate,
};
use qchrom::graph::io::{parse_dimacs, parse_json, write_dimacs, write_json};
use qchrom::graph::{complement, ClassicalColouring, Graph};
use qchrom::linalg::CMat;
use qchrom::solve::{chromatic_number, dsatur_greedy, max_clique, max_independent_set, Budget};
use qchrom::vecrep::{VectorRep, Vectors};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn unitary(seed: u64, d: usize) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = DMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    z.qr().q()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solvers_match_exhaustive_search(g in graph(7)) {
        let chi = chromatic_number(&g, &mut Budget::default()).unwrap();
        let omega = max_clique(&g, &mut Budget::default()).unwrap();
        let alpha = max_independent_set(&g, &mut Budget::default()).unwrap();
        prop_assert_eq!(chi.value, brute_chi(&g));
        prop_assert_eq!(omega.value, brute_clique(&g));
        prop_assert_eq!(alpha.value, brute_clique(&complement(&g)));
        prop_assert!(is_proper(&g, chi.colouring().unwrap().colours()));
        prop_assert!(g.is_clique(omega.vertices().unwrap()));
        prop_assert!(g.is_independent(alpha.vertices().unwrap()));
        prop_assert!(omega.value <= chi.value && chi.value <= dsatur_greedy(&g).used_colours());
    }

    #[test]
    fn graph_formats_round_trip(g in graph(12)) {
        prop_assert_eq!(&parse_dimacs(&write_dimacs(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_json(&write_json(&g)).unwrap(), &g);
    }

    #[test]
    fn certificate_json_round_trips(g in graph(8), seed in any::<u64>()) {
        let col = dsatur_greedy(&g);
        let w = unitary(seed, col.c());
        let cert = classical_to_rank1(&g, &col).unwrap().map_unitaries(|_, u| &w * u).unwrap();
        let text = write_certificate_json(&g, &cert.clone().into());
        let (g2, back) = parse_certificate_json(&text).unwrap();
        prop_assert_eq!(&g2, &g);
        let Certificate::Rank1(back) = back else { panic!("kind changed") };
        for (a, b) in cert.unitaries().iter().zip(back.unitaries()) {
            prop_assert_eq!(a, b);
        }
        prop_assert!(verify_rank1(&g2, &back, TOL).unwrap().pass);
    }

    #[test]
    fn verification_is_gauge_invariant(g in graph(8), seed in any::<u64>(), phases in proptest::collection::vec(0.0..6.3f64, 8)) {
        let col = dsatur_greedy(&g);
        let c = col.c();
        let w = unitary(seed, c);
        let cert = classical_to_rank1(&g, &col).unwrap();
        let gauged = cert
            .map_unitaries(|_, u| {
                let d = CMat::from_fn(c, c, |i, j| if i == j { Complex64::from_polar(1.0, phases[i]) } else { Complex64::new(0.0, 0.0) });
                &w * u * d
            })
            .unwrap();
        let before = verify_rank1(&g, &cert, TOL).unwrap();
        let after = verify_rank1(&g, &gauged, TOL).unwrap();
        prop_assert!(before.pass && after.pass);
        let rows: Vec<Mat> = gauged.unitaries().iter().map(to_rows).collect();
        prop_assert!(rank1_worst_residual(&g, &rows) <= TOL);
    }

    #[test]
    fn fourier_lift_agrees_with_classical_lift(g in graph(8)) {
        // colour k becomes the vector of k-th powers of the c-th root of unity
        let col = dsatur_greedy(&g);
        let c = col.c();
        let vectors: Vec<Vec<Complex64>> = col
            .colours()
            .iter()
            .map(|&k| (0..c).map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * (j * k) as f64 / c as f64)).collect())
            .collect();
        let rep = VectorRep::new(c, Vectors::Float(vectors)).unwrap();
        let fourier = unit_modulus_rep_to_rank1(&g, &rep).unwrap();
        let classical = classical_to_rank1(&g, &col).unwrap();
        for (a, b) in fourier.unitaries().iter().zip(classical.unitaries()) {
            prop_assert!((a - b).iter().all(|z| z.norm() < 1e-12));
        }
    }

    #[test]
    fn tensor_union_multiplies_colours(g in graph(5), h_bits in proptest::collection::vec(any::<bool>(), 10)) {
        let n = g.n();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let h = Graph::new(n, pairs.zip(h_bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap();
        let pg = rank1_to_projector(&classical_to_rank1(&g, &dsatur_greedy(&g)).unwrap()).unwrap();
        let ph = rank1_to_projector(&classical_to_rank1(&h, &dsatur_greedy(&h)).unwrap()).unwrap();
        let (u, cert) = tensor_union(&g, &pg, &h, &ph, TOL).unwrap();
        prop_assert_eq!(cert.c(), pg.c() * ph.c());
        prop_assert_eq!(cert.r(), pg.r() * ph.r());
        prop_assert_eq!(cert.d(), pg.d() * ph.d());
        prop_assert_eq!(u.edge_count(), g.edges().chain(h.edges()).collect::<std::collections::BTreeSet<_>>().len());
        prop_assert!(verify(&u, &cert.into(), TOL).unwrap().pass);
    }

    #[test]
    fn improper_colourings_never_verify(g in graph(8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let (v, w) = g.edges().nth(pick.index(g.edge_count())).unwrap();
        let mut colours = dsatur_greedy(&g).colours().to_vec();
        colours[w] = colours[v];
        let c = colours.iter().max().unwrap() + 1;
        let col = ClassicalColouring::new(c, colours).unwrap();
        prop_assert!(!is_proper(&g, col.colours()));
        prop_assert!(classical_to_rank1(&g, &col).is_err());
    }
}
