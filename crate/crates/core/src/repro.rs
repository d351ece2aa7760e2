//! Reproduction suite for the concrete examples: each check pairs a claimed
//! integer (with the statement it comes from) with the value computed here.

use crate::cert::{
    classical_to_rank1, equalize_ranks, extract_classical_3col, pullback, rank1_to_projector, rank1_to_rep,
    real_rep_to_rank1_od, tensor_union, unit_modulus_rep_to_rank1, verify, verify_projector, verify_rank1, Certificate,
    DEFAULT_TOL,
};
use crate::graph::{complete_graph, gnp, verify_proper_colouring, ClassicalColouring, Graph, Homomorphism};
use crate::solve::{chromatic_number, is_bipartite, max_clique, max_independent_set, Budget, SolveError};
use crate::vecrep::{
    dim4_paper_colouring, fourth_roots_dim4_graph, g18_dataset, hadamard_graph, hadamard_rep,
    is_orthogonal_representation, roots_of_unity_colouring, roots_of_unity_graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// Claimed value with the statement it reproduces.
#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub key: &'static str,
    pub citation: &'static str,
    pub value: i64,
}

macro_rules! claims {
    ($($key:literal => $value:expr, $citation:literal;)*) => {
        /// Every expected value used by [`repro_all`].
        pub const CLAIMS: &[Claim] = &[$(Claim { key: $key, citation: $citation, value: $value }),*];
    };
}

claims! {
    "g18.edges" => 44, "18-vertex example: 18 vertices and 44 edges";
    "g18.od_lift_colours" => 4, "18-vertex example: its 4-dimensional real representation gives a quantum colouring with 4 colours";
    "g18.chi" => 5, "18-vertex example: chromatic number 5";
    "g18.omega" => 4, "18-vertex example: the four vectors of one orthonormal basis form a 4-clique, so omega = 4";
    "dim4.vertices" => 64, "fourth-roots graph: vectors (1, i^a, i^b, i^c), 4^3 = 64 vertices";
    "dim4.paper_colouring_monochromatic_edges" => 0, "fourth-roots graph: the printed 4-colouring is proper";
    "dim4.chi" => 4, "fourth-roots graph: chromatic number 4";
    "dim4.omega" => 4, "fourth-roots graph: orthonormal bases give 4-cliques, omega = 4";
    "roots3.vertices" => 27, "p-th roots graph at p = 3: p^p = 27 vertices";
    "roots3.chi" => 3, "p-th roots graph: chromatic number p";
    "roots3.omega" => 3, "p-th roots graph: omega = p";
    "roots3.alpha" => 9, "p-th roots graph: alpha = p^(p-1)";
    "roots3.alpha_times_omega" => 27, "p-th roots graph: alpha * omega = n for this vertex-transitive graph";
    "roots3.colouring_monochromatic_edges" => 0, "p-th roots graph: colour (x_1 - x_2) mod p is proper";
    "hadamard4.vertices" => 16, "Hadamard graph n = 4: 2^n vertices";
    "hadamard4.edges" => 48, "Hadamard graph n = 4: 2^n * C(4,2) / 2 = 48 edges";
    "hadamard4.chi" => 4, "Hadamard graph: chi = n for n in {1, 2, 4, 8}";
    "hadamard4.lift_colours" => 4, "Hadamard graph: the +-1 vectors lift to a quantum colouring with n colours";
    "props.classical_round_trip_failures" => 0, "classical colouring lifted to a rank-1 certificate always verifies";
    "props.rank1_to_rep_failures" => 0, "first columns of a rank-1 certificate form an orthogonal representation";
    "props.extract3_failures" => 0, "3-colour rank-1 certificates on connected graphs come from classical colourings";
    "props.transform_failures" => 0, "tensor union and pullback preserve passing certificates";
    "props.equalize_failures" => 0, "rank equalization keeps certificates passing with equal ranks";
}

pub fn claim(key: &str) -> &'static Claim {
    CLAIMS
        .iter()
        .find(|c| c.key == key)
        .unwrap_or_else(|| panic!("unknown claim `{key}`"))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproOutcome {
    pub item: &'static str,
    pub key: &'static str,
    pub citation: &'static str,
    pub claimed: i64,
    /// `None` when the computation was inconclusive or failed.
    pub computed: Option<i64>,
    pub pass: bool,
    pub ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

struct Runner<'a> {
    item: &'static str,
    budget: &'a mut Budget,
    out: Vec<ReproOutcome>,
}

impl Runner<'_> {
    fn check(&mut self, key: &'static str, f: impl FnOnce(&mut Budget) -> Result<i64, String>) {
        let c = claim(key);
        let start = Instant::now();
        let (computed, note) = match f(self.budget) {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e)),
        };
        self.out.push(ReproOutcome {
            item: self.item,
            key,
            citation: c.citation,
            claimed: c.value,
            computed,
            pass: computed == Some(c.value),
            ms: start.elapsed().as_secs_f64() * 1e3,
            note,
        });
    }
}

fn show<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn chi(g: &Graph, b: &mut Budget) -> Result<i64, String> {
    chromatic_number(g, b).map(|r| r.value as i64).map_err(show)
}

fn omega(g: &Graph, b: &mut Budget) -> Result<i64, String> {
    max_clique(g, b).map(|r| r.value as i64).map_err(show)
}

fn alpha(g: &Graph, b: &mut Budget) -> Result<i64, String> {
    max_independent_set(g, b).map(|r| r.value as i64).map_err(show)
}

fn monochromatic(g: &Graph, col: &ClassicalColouring) -> Result<i64, String> {
    Ok(verify_proper_colouring(g, col).map_err(show)?.violations.len() as i64)
}

/// Runs items (a) to (e) in order. Each solver call draws from `budget`;
/// running out marks the affected check as not passing.
pub fn repro_all(budget: &mut Budget) -> Vec<ReproOutcome> {
    let mut r = Runner {
        item: "a",
        budget,
        out: Vec::new(),
    };

    match g18_dataset() {
        Ok((g, rep)) => {
            r.check("g18.edges", |_| Ok(g.edge_count() as i64));
            r.check("g18.od_lift_colours", |_| {
                let cert = real_rep_to_rank1_od(&g, &rep).map_err(show)?;
                let report = verify_rank1(&g, &cert, 1e-12).map_err(show)?;
                if report.pass {
                    Ok(cert.c() as i64)
                } else {
                    Err(format!("lift does not verify at 1e-12: {report}"))
                }
            });
            r.check("g18.chi", |b| chi(&g, b));
            r.check("g18.omega", |b| omega(&g, b));
        }
        Err(e) => r.check("g18.edges", |_| Err(e.to_string())),
    }

    r.item = "b";
    match fourth_roots_dim4_graph() {
        Ok((g, _)) => {
            r.check("dim4.vertices", |_| Ok(g.n() as i64));
            r.check("dim4.paper_colouring_monochromatic_edges", |_| {
                monochromatic(&g, &dim4_paper_colouring().map_err(show)?)
            });
            r.check("dim4.chi", |b| chi(&g, b));
            r.check("dim4.omega", |b| omega(&g, b));
        }
        Err(e) => r.check("dim4.vertices", |_| Err(e.to_string())),
    }

    r.item = "c";
    match roots_of_unity_graph(3) {
        Ok((g, _)) => {
            r.check("roots3.vertices", |_| Ok(g.n() as i64));
            r.check("roots3.chi", |b| chi(&g, b));
            r.check("roots3.omega", |b| omega(&g, b));
            r.check("roots3.alpha", |b| alpha(&g, b));
            r.check("roots3.alpha_times_omega", |b| Ok(alpha(&g, b)? * omega(&g, b)?));
            r.check("roots3.colouring_monochromatic_edges", |_| {
                monochromatic(&g, &roots_of_unity_colouring(3).map_err(show)?)
            });
        }
        Err(e) => r.check("roots3.vertices", |_| Err(e.to_string())),
    }

    r.item = "d";
    match hadamard_graph(4) {
        Ok(g) => {
            r.check("hadamard4.vertices", |_| Ok(g.n() as i64));
            r.check("hadamard4.edges", |_| Ok(g.edge_count() as i64));
            r.check("hadamard4.chi", |b| chi(&g, b));
            r.check("hadamard4.lift_colours", |_| {
                let cert = unit_modulus_rep_to_rank1(&g, &hadamard_rep(4).map_err(show)?).map_err(show)?;
                Ok(cert.c() as i64)
            });
        }
        Err(e) => r.check("hadamard4.vertices", |_| Err(e.to_string())),
    }

    r.item = "e";
    let mut rng = ChaCha8Rng::seed_from_u64(REPRO_SEED);
    for key in PROPERTY_KEYS {
        r.check(key, |_| property_check(key, REPRO_CASES, &mut rng));
    }
    r.out
}

/// Randomized cases per property in [`repro_all`].
pub const REPRO_CASES: usize = 25;
const REPRO_SEED: u64 = 0x5eed;

/// Claim keys of the randomized checks, in run order.
pub const PROPERTY_KEYS: [&str; 5] = [
    "props.classical_round_trip_failures",
    "props.rank1_to_rep_failures",
    "props.extract3_failures",
    "props.transform_failures",
    "props.equalize_failures",
];

/// A connected graph with chromatic number exactly 3 and one of its proper
/// 3-colourings: planted partition, resampled until connected and not bipartite.
pub fn random_connected_3_chromatic(rng: &mut ChaCha8Rng) -> (Graph, ClassicalColouring) {
    loop {
        let n = rng.gen_range(5..=12);
        let colours: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let p = rng.gen_range(0.3..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if colours[u] != colours[v] && rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let Ok(g) = Graph::new(n, edges) else { continue };
        if g.is_connected() && is_bipartite(&g).is_none() {
            let col = ClassicalColouring::new(3, colours).expect("colours below 3");
            return (g, col);
        }
    }
}

fn count_failures(cases: usize, mut f: impl FnMut(usize) -> Result<bool, String>) -> Result<i64, String> {
    let mut failures = 0;
    for i in 0..cases {
        if !f(i)? {
            failures += 1;
        }
    }
    Ok(failures)
}

fn random_coloured_graph(rng: &mut ChaCha8Rng) -> Result<(Graph, ClassicalColouring), SolveError> {
    let n = rng.gen_range(2..=9);
    let g = gnp(n, rng.gen_range(0.2..0.7), rng.gen())?;
    let col = chromatic_number(&g, &mut Budget::default())?
        .colouring()
        .cloned()
        .expect("chi has a colouring");
    Ok((g, col))
}

/// One seeded randomized check from [`PROPERTY_KEYS`]: the number of failing
/// cases out of `cases`, or an error message.
pub fn property_check(key: &str, cases: usize, rng: &mut ChaCha8Rng) -> Result<i64, String> {
    match key {
        "props.classical_round_trip_failures" => count_failures(cases, |_| {
            let (g, col) = random_coloured_graph(rng).map_err(show)?;
            let cert = classical_to_rank1(&g, &col).map_err(show)?;
            Ok(verify_rank1(&g, &cert, DEFAULT_TOL).map_err(show)?.pass)
        }),

        "props.rank1_to_rep_failures" => count_failures(cases, |_| {
            let (g, col) = random_coloured_graph(rng).map_err(show)?;
            let rep = rank1_to_rep(&classical_to_rank1(&g, &col).map_err(show)?).map_err(show)?;
            Ok(rep.dim() == col.c() && is_orthogonal_representation(&g, &rep, DEFAULT_TOL).map_err(show)?)
        }),

        "props.extract3_failures" => count_failures(cases, |_| {
            let (g, col) = random_connected_3_chromatic(rng);
            let cert = classical_to_rank1(&g, &col).map_err(show)?;
            Ok(extract_classical_3col(&g, &cert, DEFAULT_TOL)
                .map_err(show)?
                .equivalent_up_to_palette(&col))
        }),

        "props.transform_failures" => count_failures(cases, |_| {
            let (g, col) = random_coloured_graph(rng).map_err(show)?;
            let n = g.n();
            let h = gnp(n, 0.4, rng.gen()).map_err(show)?;
            let hcol = chromatic_number(&h, &mut Budget::default()).map_err(show)?;
            let cg = rank1_to_projector(&classical_to_rank1(&g, &col).map_err(show)?).map_err(show)?;
            let hc = hcol.colouring().expect("colouring witness");
            let ch = rank1_to_projector(&classical_to_rank1(&h, hc).map_err(show)?).map_err(show)?;
            let union_ok = match tensor_union(&g, &cg, &h, &ch, DEFAULT_TOL) {
                Ok((u, cert)) => verify_projector(&u, &cert, DEFAULT_TOL).map_err(show)?.pass,
                Err(crate::cert::CertError::DimensionCap(_)) => true,
                Err(e) => return Err(e.to_string()),
            };
            let k = complete_graph(col.c()).map_err(show)?;
            let kc = ClassicalColouring::new(col.c(), (0..col.c()).collect()).map_err(show)?;
            let kcert: Certificate = classical_to_rank1(&k, &kc).map_err(show)?.into();
            let hom = Homomorphism::from_colouring(&g, &col).map_err(show)?;
            let pulled = pullback(&hom, &kcert, DEFAULT_TOL).map_err(show)?;
            Ok(union_ok && verify(&g, &pulled, DEFAULT_TOL).map_err(show)?.pass)
        }),

        "props.equalize_failures" => count_failures(cases, |_| {
            let (g, col) = random_coloured_graph(rng).map_err(show)?;
            let p = rank1_to_projector(&classical_to_rank1(&g, &col).map_err(show)?).map_err(show)?;
            let d = p.d();
            let eq = equalize_ranks(&p.into(), DEFAULT_TOL).map_err(show)?;
            Ok(eq.r() == d && eq.d() == d * col.c() && verify_projector(&g, &eq, DEFAULT_TOL).map_err(show)?.pass)
        }),
        other => Err(format!("unknown property `{other}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims_are_unique_and_cited() {
        for (i, a) in CLAIMS.iter().enumerate() {
            assert!(!a.citation.is_empty());
            assert!(CLAIMS[i + 1..].iter().all(|b| b.key != a.key), "{}", a.key);
        }
    }

    #[test]
    fn property_checks_pass_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for key in PROPERTY_KEYS {
            assert_eq!(property_check(key, 5, &mut rng), Ok(0), "{key}");
            assert!(CLAIMS.iter().any(|c| c.key == key));
        }
    }
}
