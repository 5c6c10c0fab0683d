//! Maximum clique by branch and bound with greedy-coloring bounds.

use std::time::Instant;

use super::bits::BitSet;
use super::{Budget, Outcome};
use crate::graph::SimpleGraph;

struct Search<'a> {
    adj: Vec<BitSet>,
    order: Vec<usize>,
    best: Vec<usize>,
    current: Vec<usize>,
    budget: &'a mut Budget,
    aborted: bool,
}

/// Maximum clique of `g`. The witness is the best clique found, in
/// ascending vertex order; `upper` is the root coloring bound if the budget
/// ran out.
pub fn max_clique(g: &SimpleGraph, budget: &mut Budget) -> Outcome<Vec<usize>> {
    let start = Instant::now();
    let n = g.vertex_count();
    if n == 0 {
        return Outcome {
            lower: 0,
            upper: 0,
            witness: Vec::new(),
            elapsed: start.elapsed(),
        };
    }
    // positions sorted by degree descending, ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut s = BitSet::new(n);
            for &w in g.neighbors(v) {
                s.insert(pos[w]);
            }
            s
        })
        .collect();

    // greedy seed in degree order
    let mut seed: Vec<usize> = Vec::new();
    for i in 0..n {
        if seed.iter().all(|&j| adj[i].contains(j)) {
            seed.push(i);
        }
    }

    let mut search = Search {
        adj,
        order,
        best: seed,
        current: Vec::new(),
        budget,
        aborted: false,
    };
    let root = BitSet::full(n);
    let (_, root_colors) = search.color_sort(&root);
    let root_bound = root_colors.last().copied().unwrap_or(0);
    search.expand(root);

    let lower = search.best.len();
    let upper = if search.aborted { root_bound.max(lower) } else { lower };
    let mut witness: Vec<usize> = search.best.iter().map(|&p| search.order[p]).collect();
    witness.sort_unstable();
    Outcome {
        lower,
        upper,
        witness,
        elapsed: start.elapsed(),
    }
}

impl Search<'_> {
    /// Greedy sequential coloring of `p`; returns vertices and their color
    /// numbers (1-based), sorted by color.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                verts.push(v);
                colors.push(color);
            }
        }
        (verts, colors)
    }

    fn expand(&mut self, mut p: BitSet) {
        let (verts, colors) = self.color_sort(&p);
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            if self.budget.expired() {
                self.aborted = true;
                return;
            }
            let v = verts[i];
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
                if self.aborted {
                    return;
                }
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

pub fn is_clique(g: &SimpleGraph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Exhaustive check of every vertex subset.
    fn brute_force(g: &SimpleGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                is_clique(g, &vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs() {
        let mut b = Budget::unlimited();
        assert_eq!(max_clique(&cycle(6), &mut b).exact(), Some(2));
        assert_eq!(max_clique(&cycle(3), &mut b).exact(), Some(3));
        let edgeless = SimpleGraph::from_edges(2, []).unwrap();
        assert_eq!(max_clique(&edgeless, &mut b).exact(), Some(1));
        assert_eq!(max_clique(&SimpleGraph::default(), &mut b).exact(), Some(0));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        // deterministic pseudo-random graphs
        let mut state = 0x2545F4914F6CDD1Du64;
        for n in 1..=12 {
            for _ in 0..5 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 3 != 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = SimpleGraph::from_edges(n, edges).unwrap();
                let out = max_clique(&g, &mut Budget::unlimited());
                assert_eq!(out.exact(), Some(brute_force(&g)));
                assert!(is_clique(&g, &out.witness));
                assert_eq!(out.witness.len(), out.lower);
            }
        }
    }
}
