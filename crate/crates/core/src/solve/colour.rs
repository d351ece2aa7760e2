use super::{elapsed_ms, max_clique, Budget, Parameter, SolveError, SolveResult, Stats, Witness};
use crate::graph::{verify_proper_colouring, ClassicalColouring, Graph, GraphError};
use std::collections::VecDeque;
use std::time::Instant;

const NONE: usize = usize::MAX;

/// First-fit colouring in the given vertex order.
pub fn greedy_colouring(g: &Graph, order: &[usize]) -> Result<ClassicalColouring, GraphError> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(GraphError::Invalid("order is not a permutation of the vertices".into()));
    }
    let mut colour = vec![NONE; n];
    let mut used = vec![false; n + 1];
    for &v in order {
        for u in g.neighbours(v).iter() {
            if colour[u] != NONE {
                used[colour[u]] = true;
            }
        }
        colour[v] = used.iter().position(|&b| !b).unwrap();
        for u in g.neighbours(v).iter() {
            if colour[u] != NONE {
                used[colour[u]] = false;
            }
        }
    }
    ClassicalColouring::from_colours(colour)
}

/// Heuristic DSATUR: repeatedly colour the vertex of highest saturation
/// (then highest degree, then lowest index) with its smallest free colour.
pub fn dsatur_greedy(g: &Graph) -> ClassicalColouring {
    let n = g.n();
    let mut colour = vec![NONE; n];
    let mut adjacent_colours: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == NONE)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = adjacent_colours[v].iter().position(|&b| !b).unwrap();
        colour[v] = c;
        for u in g.neighbours(v).iter() {
            if !adjacent_colours[u][c] {
                adjacent_colours[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    ClassicalColouring::from_colours(colour).expect("dsatur colours in range")
}

/// Proper 2-colouring by breadth-first search, or `None` if an odd cycle exists.
pub fn is_bipartite(g: &Graph) -> Option<ClassicalColouring> {
    let n = g.n();
    let mut side = vec![NONE; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != NONE {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbours(u).iter() {
                if side[v] == NONE {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(ClassicalColouring::new(2, side).expect("two sides"))
}

/// Exact DSATUR branch and bound for one colour count `k`.
struct KColour<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// `forbid[v * k + c]`: number of neighbours of `v` holding colour `c`.
    forbid: Vec<u32>,
    sat: Vec<usize>,
    uncoloured: usize,
    budget: &'a mut Budget,
}

impl KColour<'_> {
    /// Returns true when some uncoloured neighbour has no colour left.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.colour[v] = c;
        self.uncoloured -= 1;
        let mut wipeout = false;
        for u in self.g.neighbours(v).iter() {
            let slot = &mut self.forbid[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] += 1;
                if self.colour[u] == NONE && self.sat[u] == self.k {
                    wipeout = true;
                }
            }
        }
        wipeout
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = NONE;
        self.uncoloured += 1;
        for u in self.g.neighbours(v).iter() {
            let slot = &mut self.forbid[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Highest saturation first; ties go to the lowest index.
    fn select(&self) -> usize {
        let mut best = NONE;
        let mut best_sat = 0;
        for v in 0..self.colour.len() {
            if self.colour[v] == NONE && (best == NONE || self.sat[v] > best_sat) {
                best = v;
                best_sat = self.sat[v];
            }
        }
        best
    }

    /// Colours `used..` are interchangeable, so only the first unused one is tried.
    fn search(&mut self, used: usize) -> Result<bool, SolveError> {
        if self.uncoloured == 0 {
            return Ok(true);
        }
        self.budget.tick()?;
        let v = self.select();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbid[v * self.k + c] > 0 {
                continue;
            }
            let wipeout = self.assign(v, c);
            if !wipeout && self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Decides `k`-colourability with `clique` precoloured `0..|clique|`.
fn k_colourable_seeded(
    g: &Graph,
    k: usize,
    clique: &[usize],
    budget: &mut Budget,
) -> Result<Option<ClassicalColouring>, SolveError> {
    if clique.len() > k {
        return Ok(None);
    }
    let n = g.n();
    let mut s = KColour {
        g,
        k,
        colour: vec![NONE; n],
        forbid: vec![0; n * k],
        sat: vec![0; n],
        uncoloured: n,
        budget,
    };
    for (c, &v) in clique.iter().enumerate() {
        if s.assign(v, c) && s.uncoloured > 0 {
            return Ok(None);
        }
    }
    if !s.search(clique.len())? {
        return Ok(None);
    }
    let col = ClassicalColouring::new(k, s.colour)?;
    self_check(g, &col)?;
    Ok(Some(col))
}

fn self_check(g: &Graph, col: &ClassicalColouring) -> Result<(), SolveError> {
    let r = verify_proper_colouring(g, col)?;
    if r.pass {
        Ok(())
    } else {
        Err(SolveError::WitnessCheckFailed(format!(
            "colouring has {} monochromatic edge(s)",
            r.violations.len()
        )))
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = crate::bitset::BitSet::full(g.n());
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_count(g.neighbours(v)), std::cmp::Reverse(v)))
    {
        clique.push(v);
        cand.intersect_with(g.neighbours(v));
    }
    clique
}

/// A proper `k`-colouring if one exists, `None` if none does. Budget
/// exhaustion is reported as [`SolveError::Inconclusive`].
pub fn k_colourable(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<ClassicalColouring>, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroColours);
    }
    let quick = dsatur_greedy(g);
    if quick.c() <= k {
        return Ok(Some(quick.with_palette(k)?));
    }
    k_colourable_seeded(g, k, &greedy_clique(g), budget)
}

/// Chromatic number bracketed by the clique number from below and the best
/// greedy colouring from above; each gap value is decided exactly.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let before = budget.used();
    let omega = max_clique(g, budget)?;
    let clique = omega.vertices().expect("clique witness").to_vec();

    let natural: Vec<usize> = (0..g.n()).collect();
    let first_fit = greedy_colouring(g, &natural)?;
    let dsatur = dsatur_greedy(g);
    let upper = if dsatur.c() <= first_fit.c() { dsatur } else { first_fit };

    let mut best = upper.clone();
    for k in omega.value..upper.c() {
        if let Some(col) = k_colourable_seeded(g, k, &clique, budget)? {
            best = col;
            break;
        }
    }
    self_check(g, &best)?;
    let value = best.c();
    if !(omega.value <= value && value <= upper.c()) {
        return Err(SolveError::WitnessCheckFailed(format!(
            "sandwich violated: omega {} chi {} greedy {}",
            omega.value,
            value,
            upper.c()
        )));
    }
    Ok(SolveResult {
        parameter: Parameter::Chi,
        value,
        witness: Witness::Colouring(best),
        stats: Stats {
            nodes: budget.used() - before,
            ms: elapsed_ms(start),
            deterministic: true,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, gnp};

    #[test]
    fn greedy_examples() {
        let k5 = complete_graph(5).unwrap();
        assert_eq!(greedy_colouring(&k5, &[4, 2, 0, 1, 3]).unwrap().c(), 5);
        let e = Graph::edgeless(6).unwrap();
        assert_eq!(greedy_colouring(&e, &[5, 4, 3, 2, 1, 0]).unwrap().c(), 1);
        let c5 = cycle_graph(5).unwrap();
        let col = greedy_colouring(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(col.colours(), &[0, 1, 0, 1, 2]);
        assert!(greedy_colouring(&c5, &[0, 1, 2, 3, 3]).is_err());
        assert!(greedy_colouring(&c5, &[0, 1, 2]).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let c6 = cycle_graph(6).unwrap();
        let col = is_bipartite(&c6).unwrap();
        assert!(verify_proper_colouring(&c6, &col).unwrap().pass);
        assert!(is_bipartite(&cycle_graph(5).unwrap()).is_none());
        let e = is_bipartite(&Graph::edgeless(4).unwrap()).unwrap();
        assert_eq!(e.colours(), &[0, 0, 0, 0]);
    }

    #[test]
    fn k_colourable_examples() {
        let mut b = Budget::default();
        assert_eq!(k_colourable(&complete_graph(4).unwrap(), 3, &mut b).unwrap(), None);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(k_colourable(&c5, 2, &mut b).unwrap(), None);
        let col = k_colourable(&c5, 3, &mut b).unwrap().unwrap();
        assert!(verify_proper_colouring(&c5, &col).unwrap().pass);
        assert_eq!(k_colourable(&c5, 0, &mut b), Err(SolveError::ZeroColours));
    }

    #[test]
    fn chromatic_small() {
        let mut b = Budget::default();
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap(), &mut b).unwrap().value, 3);
        assert_eq!(chromatic_number(&cycle_graph(8).unwrap(), &mut b).unwrap().value, 2);
        assert_eq!(chromatic_number(&Graph::edgeless(3).unwrap(), &mut b).unwrap().value, 1);
        assert_eq!(chromatic_number(&complete_graph(7).unwrap(), &mut b).unwrap().value, 7);
    }

    #[test]
    fn chromatic_deterministic() {
        let g = gnp(30, 0.5, 99).unwrap();
        let a = chromatic_number(&g, &mut Budget::default()).unwrap();
        let b = chromatic_number(&g, &mut Budget::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
    }
}
