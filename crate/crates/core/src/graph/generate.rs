use super::{Graph, GraphError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Name of the PRNG behind [`gnp`]; recorded in experiment reports.
pub const PRNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::from_predicate(n, |_, _| true)
}

/// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Erdős–Rényi `G(n, p)`. Pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and each draws one uniform `f64`; the pair is an edge
/// when the draw is below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_predicate(n, |_, _| rng.gen::<f64>() < p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        assert_eq!(complete_graph(18).unwrap().edge_count(), 153);
        assert_eq!(complete_graph(0), Err(GraphError::Empty));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(12, 0.0, 7).unwrap().edge_count(), 0);
        assert_eq!(gnp(12, 1.0, 7).unwrap(), complete_graph(12).unwrap());
        assert!(gnp(5, 1.5, 0).is_err());
        assert!(gnp(5, -0.1, 0).is_err());
    }

    #[test]
    fn gnp_edge_count_within_binomial_band() {
        // 435 pairs, mean 217.5, sd ~10.4; [150, 285] is well outside 5 sd.
        for seed in 0..20 {
            let m = gnp(30, 0.5, seed).unwrap().edge_count();
            assert!((150..=285).contains(&m), "seed {seed}: {m}");
        }
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(40, 0.3, 0xDEADBEEF).unwrap();
        let b = gnp(40, 0.3, 0xDEADBEEF).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gnp(40, 0.3, 0xDEADBEF0).unwrap());
    }
}
