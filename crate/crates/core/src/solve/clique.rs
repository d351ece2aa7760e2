use super::{elapsed_ms, Budget, Parameter, SolveError, SolveResult, Stats, Witness};
use crate::bitset::BitSet;
use crate::graph::{complement, Graph};
use std::time::Instant;

/// Degeneracy order: repeatedly remove a minimum-degree vertex (lowest index
/// on ties). Returned in reverse removal order, so the densest core comes first.
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        removed[v] = true;
        seq.push(v);
        for u in g.neighbours(v).iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    seq.reverse();
    seq
}

struct CliqueSearch<'a> {
    adj: Vec<BitSet>,
    best: Vec<usize>,
    budget: &'a mut Budget,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `p` in label order. Returns vertices
    /// grouped by colour class with the class number (1-based) of each.
    fn colour_sort(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, k));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: BitSet) -> Result<(), SolveError> {
        self.budget.tick()?;
        let order = self.colour_sort(&p);
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= self.best.len() {
                return Ok(());
            }
            current.push(v);
            let np = p.intersection(&self.adj[v]);
            if np.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, np)?;
            }
            current.pop();
            p.remove(v);
        }
        Ok(())
    }
}

fn greedy_clique(adj: &[BitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut clique = vec![0];
    let mut cand = adj[0].clone();
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_count(&adj[v]), std::cmp::Reverse(v)))
    {
        clique.push(v);
        cand.intersect_with(&adj[v]);
    }
    debug_assert!(clique.iter().all(|&v| v < n));
    clique
}

/// Maximum clique by colour-bounded branch and bound over bitsets, vertices
/// relabelled by degeneracy order.
pub fn max_clique(g: &Graph, budget: &mut Budget) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let before = budget.used();
    let order = degeneracy_order(g);
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut row = BitSet::new(n);
            for u in g.neighbours(v).iter() {
                row.insert(pos[u]);
            }
            row
        })
        .collect();

    let best = greedy_clique(&adj);
    let mut search = CliqueSearch { adj, best, budget };
    search.expand(&mut Vec::new(), BitSet::full(n))?;

    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    if !g.is_clique(&witness) {
        return Err(SolveError::WitnessCheckFailed(format!("{witness:?} is not a clique")));
    }
    let nodes = search.budget.used() - before;
    Ok(SolveResult {
        parameter: Parameter::Omega,
        value: witness.len(),
        witness: Witness::Vertices(witness),
        stats: Stats {
            nodes,
            ms: elapsed_ms(start),
            deterministic: true,
        },
    })
}

/// `alpha(G) = omega(complement(G))`.
pub fn max_independent_set(g: &Graph, budget: &mut Budget) -> Result<SolveResult, SolveError> {
    let mut r = max_clique(&complement(g), budget)?;
    let set = r.vertices().expect("clique witness").to_vec();
    if !g.is_independent(&set) {
        return Err(SolveError::WitnessCheckFailed(format!("{set:?} is not independent")));
    }
    r.parameter = Parameter::Alpha;
    Ok(r)
}
