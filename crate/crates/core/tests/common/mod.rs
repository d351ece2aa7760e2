//! Reference implementations used as oracles by the integration tests.
//! They share no code with the library beyond the `Graph` accessors.

#![allow(dead_code)]

use num_complex::Complex64;
use qchrom::graph::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Largest clique by enumerating all vertex subsets (`n <= 20`).
pub fn brute_clique(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset enumeration limited to 20 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect();
    let mut best = 0;
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let clique = (0..n)
            .filter(|&u| mask >> u & 1 == 1)
            .all(|u| mask & !(1 << u) & !adj[u] == 0);
        if clique {
            best = size;
        }
    }
    best
}

/// Chromatic number by trying every assignment of `k` colours (`k^n`),
/// smallest `k` first (`n <= 8`).
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 8, "exhaustive colouring limited to 8 vertices");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n.max(1) {
        // odometer over all k^n assignments
        let mut colours = [0usize; 8];
        loop {
            if edges.iter().all(|&(u, v)| colours[u] != colours[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colours[i] == k - 1 {
                colours[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colours[i] += 1;
        }
    }
    n
}

/// Plain backtracking `k`-colourability in vertex-index order, for graphs
/// too large for [`brute_chi`].
pub fn backtrack_colourable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(adj: &[Vec<bool>], k: usize, v: usize, colours: &mut Vec<usize>, max_used: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        // symmetry breaking: a new colour may only be the next unused one
        for c in 0..k.min(max_used + 1) {
            if (0..v).all(|u| !adj[v][u] || colours[u] != c) {
                colours.push(c);
                if go(adj, k, v + 1, colours, max_used.max(c + 1)) {
                    return true;
                }
                colours.pop();
            }
        }
        false
    }
    let adj = adjacency(g);
    let mut colours = Vec::new();
    go(&adj, k, 0, &mut colours, 0).then_some(colours)
}

/// Largest clique by plain recursive extension, for graphs beyond subset enumeration.
pub fn backtrack_clique(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], cand: Vec<usize>, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        if cand.is_empty() {
            *best = size;
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
            go(adj, next, size + 1, best);
        }
    }
    let adj = adjacency(g);
    let mut best = 0;
    go(&adj, (0..g.n()).collect(), 0, &mut best);
    best
}

pub fn is_proper(g: &Graph, colours: &[usize]) -> bool {
    g.edges().all(|(u, v)| colours[u] != colours[v])
}

pub type Mat = Vec<Vec<Complex64>>;

/// Row-major copy of an `nalgebra` matrix.
pub fn to_rows(m: &qchrom::linalg::CMat) -> Mat {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

/// Independent rank-1 verifier on row-major matrices: the worst of the
/// unitarity residual `|U^dagger U - I|` and the edge residuals
/// `|<e_{v,a}, e_{w,a}>|`.
pub fn rank1_worst_residual(g: &Graph, us: &[Mat]) -> f64 {
    let col_dot = |a: &Mat, i: usize, b: &Mat, j: usize| -> Complex64 {
        a.iter().zip(b).map(|(ra, rb)| ra[i].conj() * rb[j]).sum()
    };
    let mut worst: f64 = 0.0;
    for u in us {
        let c = u.len();
        for i in 0..c {
            for j in 0..c {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((col_dot(u, i, u, j) - expect).norm());
            }
        }
    }
    for (v, w) in g.edges() {
        for a in 0..us[v].len() {
            worst = worst.max(col_dot(&us[v], a, &us[w], a).norm());
        }
    }
    worst
}
