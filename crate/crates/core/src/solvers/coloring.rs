//! Exact vertex coloring: DSATUR ordering with chronological backtracking.

use std::time::Instant;

use super::{Budget, Outcome};
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

struct Frame {
    v: usize,
    next: usize,
    used_before: usize,
}

struct Dsatur<'a> {
    g: &'a SimpleGraph,
    k: usize,
    color: Vec<usize>,
    // counts[v * k + c]: neighbors of v currently colored c
    counts: Vec<u16>,
    sat: Vec<usize>,
    free_deg: Vec<usize>,
    colored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a SimpleGraph, k: usize) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            k,
            color: vec![NONE; n],
            counts: vec![0; n * k],
            sat: vec![0; n],
            free_deg: (0..n).map(|v| g.degree(v)).collect(),
            colored: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.colored += 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * self.k + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
            self.free_deg[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        self.colored -= 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
            self.free_deg[w] += 1;
        }
    }

    /// Highest saturation, then most uncolored neighbors, then lowest index.
    fn select(&self) -> usize {
        let mut best = NONE;
        let mut key = (0, 0);
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            let k = (self.sat[v], self.free_deg[v]);
            if best == NONE || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    /// Searches for a proper coloring with at most `k` colors, with `fixed`
    /// (a clique) precolored `0, 1, ...`. `Err(())` means the budget ran out.
    fn run(mut self, fixed: &[usize], budget: &mut Budget) -> Result<Option<Vec<usize>>, ()> {
        if fixed.len() > self.k {
            return Ok(None);
        }
        for (c, &v) in fixed.iter().enumerate() {
            self.assign(v, c);
        }
        let n = self.color.len();
        let mut used = fixed.len();
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            if self.colored == n {
                return Ok(Some(self.color));
            }
            if budget.expired() {
                return Err(());
            }
            let v = self.select();
            stack.push(Frame {
                v,
                next: 0,
                used_before: used,
            });
            // advance the deepest frame that still has an untried color
            loop {
                let Some(f) = stack.last_mut() else {
                    return Ok(None);
                };
                let (v, start, used_before) = (f.v, f.next, f.used_before);
                if self.color[v] != NONE {
                    self.unassign(v);
                }
                let limit = self.k.min(used_before + 1);
                let row = &self.counts[v * self.k..(v + 1) * self.k];
                match (start..limit).find(|&c| row[c] == 0) {
                    Some(c) => {
                        stack.last_mut().unwrap().next = c + 1;
                        self.assign(v, c);
                        used = used_before.max(c + 1);
                        break;
                    }
                    None => {
                        stack.pop();
                    }
                }
            }
        }
    }
}

fn colors_used(coloring: &[usize]) -> usize {
    coloring.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Chromatic number of `g`. `clique` must be a clique of `g`; it supplies
/// the lower bound and is precolored to break color symmetry.
pub fn chromatic_number(g: &SimpleGraph, clique: &[usize], budget: &mut Budget) -> Outcome<Vec<usize>> {
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
    let mut lower = clique.len().max(1);
    // greedy DSATUR never backtracks with max degree + 1 colors
    let mut best = Dsatur::new(g, g.max_degree() + 1)
        .run(clique, &mut Budget::unlimited())
        .ok()
        .flatten()
        .expect("Δ+1 colors always suffice");
    let mut upper = colors_used(&best);
    while upper > lower {
        match Dsatur::new(g, upper - 1).run(clique, budget) {
            Ok(Some(col)) => {
                upper = colors_used(&col);
                best = col;
            }
            Ok(None) => lower = upper,
            Err(()) => break,
        }
    }
    Outcome {
        lower,
        upper,
        witness: best,
        elapsed: start.elapsed(),
    }
}

pub fn is_proper_vertex_coloring(g: &SimpleGraph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count()
        && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}
