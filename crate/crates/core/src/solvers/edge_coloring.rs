//! Chromatic index: decides between `Δ` and `Δ + 1`.
//!
//! Components are handled separately. A component whose own maximum degree
//! is below `Δ` is settled by a `Δ`-coloring from Misra–Gries. An overfull
//! component (`|E| > Δ ⌊|V|/2⌋`) cannot be `Δ`-colored. Everything else
//! goes through a Kempe-chain construction and, if that fails, an exhaustive
//! DSATUR search over the line graph.

use std::time::Instant;

use super::{Budget, Outcome};
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// Edge lists plus per-vertex incidence, edges indexed as in
/// [`SimpleGraph::edges`].
struct EdgeIndex {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<(usize, usize)>>,
}

impl EdgeIndex {
    fn new(g: &SimpleGraph) -> Self {
        let edges = g.edges();
        let mut incident = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((e, v));
            incident[v].push((e, u));
        }
        Self {
            n: g.vertex_count(),
            edges,
            incident,
        }
    }

    fn other(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.edges[e];
        if u == x {
            v
        } else {
            u
        }
    }
}

/// Partial edge coloring with `k` colors and an `(vertex, color) -> edge` table.
struct Palette<'a> {
    idx: &'a EdgeIndex,
    k: usize,
    color: Vec<usize>,
    at: Vec<usize>,
}

impl<'a> Palette<'a> {
    fn new(idx: &'a EdgeIndex, k: usize) -> Self {
        Self {
            idx,
            k,
            color: vec![NONE; idx.edges.len()],
            at: vec![NONE; idx.n * k],
        }
    }

    #[inline]
    fn is_free(&self, x: usize, c: usize) -> bool {
        self.at[x * self.k + c] == NONE
    }

    fn first_free(&self, x: usize) -> Option<usize> {
        (0..self.k).find(|&c| self.is_free(x, c))
    }

    fn set(&mut self, e: usize, c: usize) {
        self.clear(e);
        let (u, v) = self.idx.edges[e];
        self.color[e] = c;
        self.at[u * self.k + c] = e;
        self.at[v * self.k + c] = e;
    }

    fn clear(&mut self, e: usize) {
        let old = self.color[e];
        if old != NONE {
            let (u, v) = self.idx.edges[e];
            self.at[u * self.k + old] = NONE;
            self.at[v * self.k + old] = NONE;
            self.color[e] = NONE;
        }
    }

    /// Edges of the maximal path from `x` alternating `first`, `second`, ...
    fn alternating_path(&self, x: usize, first: usize, second: usize) -> (Vec<usize>, usize) {
        let mut path = Vec::new();
        let (mut cur, mut col, mut other) = (x, first, second);
        while let Some(e) = Some(self.at[cur * self.k + col]).filter(|&e| e != NONE) {
            path.push(e);
            cur = self.idx.other(e, cur);
            std::mem::swap(&mut col, &mut other);
        }
        (path, cur)
    }

    /// Exchanges colors `a` and `b` along `path`.
    fn swap_chain(&mut self, path: &[usize], a: usize, b: usize) {
        let originals: Vec<usize> = path.iter().map(|&e| self.color[e]).collect();
        for &e in path {
            self.clear(e);
        }
        for (&e, &col) in path.iter().zip(&originals) {
            self.set(e, if col == a { b } else { a });
        }
    }
}

/// A proper edge coloring with at most `Δ + 1` colors (Misra–Gries), indexed
/// like [`SimpleGraph::edges`].
pub fn misra_gries(g: &SimpleGraph) -> Vec<usize> {
    let idx = EdgeIndex::new(g);
    let k = g.max_degree() + 1;
    let mut p = Palette::new(&idx, k);
    let mut in_fan = vec![false; idx.n];
    for e in 0..idx.edges.len() {
        let (u, v) = idx.edges[e];
        // maximal fan at u starting with the uncolored edge uv
        let mut fan: Vec<(usize, usize)> = vec![(v, e)];
        in_fan[v] = true;
        loop {
            let last = fan.last().unwrap().0;
            let next = idx.incident[u].iter().copied().find(|&(e2, w)| {
                !in_fan[w] && p.color[e2] != NONE && p.is_free(last, p.color[e2])
            });
            match next {
                Some((e2, w)) => {
                    in_fan[w] = true;
                    fan.push((w, e2));
                }
                None => break,
            }
        }
        for &(w, _) in &fan {
            in_fan[w] = false;
        }
        let c = p.first_free(u).expect("u has a free color");
        let d = p.first_free(fan.last().unwrap().0).expect("fan tip has a free color");
        // invert the cd-path starting at u (it begins with a d-edge)
        if c != d {
            let (path, _) = p.alternating_path(u, d, c);
            p.swap_chain(&path, c, d);
        }
        // longest fan prefix ending at a vertex where d is free
        let mut w = None;
        for i in 0..fan.len() {
            if i > 0 {
                let col = p.color[fan[i].1];
                if col == NONE || !p.is_free(fan[i - 1].0, col) {
                    break;
                }
            }
            if p.is_free(fan[i].0, d) {
                w = Some(i);
                break;
            }
        }
        let w = w.expect("Misra–Gries invariant: some fan vertex misses d");
        // rotate the prefix fan[0..=w]
        let shifted: Vec<usize> = (0..w).map(|j| p.color[fan[j + 1].1]).collect();
        for j in 1..=w {
            p.clear(fan[j].1);
        }
        for (j, &col) in shifted.iter().enumerate() {
            p.set(fan[j].1, col);
        }
        p.set(fan[w].1, d);
    }
    p.color
}

/// Colors edges one at a time with `k` colors, resolving conflicts by
/// swapping a two-colored Kempe chain. Always succeeds on bipartite graphs
/// with `k = Δ`; otherwise it may give up and return `None`.
fn kempe_coloring(idx: &EdgeIndex, k: usize, budget: &mut Budget) -> Option<Vec<usize>> {
    let mut p = Palette::new(idx, k);
    for e in 0..idx.edges.len() {
        if budget.expired() {
            return None;
        }
        let (u, v) = idx.edges[e];
        let free_u: Vec<usize> = (0..k).filter(|&c| p.is_free(u, c)).collect();
        let free_v: Vec<usize> = (0..k).filter(|&c| p.is_free(v, c)).collect();
        if let Some(&c) = free_u.iter().find(|&&c| p.is_free(v, c)) {
            p.set(e, c);
            continue;
        }
        let mut done = false;
        'pairs: for &a in &free_u {
            for &b in &free_v {
                // a is used at v, b is used at u; swap the ab-chain from v
                let (path, end) = p.alternating_path(v, a, b);
                if end == u {
                    continue;
                }
                p.swap_chain(&path, a, b);
                p.set(e, a);
                done = true;
                break 'pairs;
            }
        }
        if !done {
            return None;
        }
    }
    Some(p.color)
}

struct Frame {
    e: usize,
    next: usize,
    used_before: usize,
}

/// DSATUR over the line graph: exhaustive search for a `k`-edge-coloring.
/// `Err(())` means the budget ran out.
fn dsatur_edge_search(idx: &EdgeIndex, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>, ()> {
    let m = idx.edges.len();
    let mut p = Palette::new(idx, k);
    // |colors at u ∪ colors at v| for each edge
    let mut sat = vec![0usize; m];
    let mut free_adj: Vec<usize> = idx
        .edges
        .iter()
        .map(|&(u, v)| idx.incident[u].len() + idx.incident[v].len() - 2)
        .collect();
    let mut colored = 0;

    let assign = |p: &mut Palette, sat: &mut Vec<usize>, free_adj: &mut Vec<usize>, e: usize, c: usize| {
        let (u, v) = idx.edges[e];
        p.set(e, c);
        for x in [u, v] {
            for &(e2, y) in &idx.incident[x] {
                if e2 != e {
                    if p.is_free(y, c) {
                        sat[e2] += 1;
                    }
                    free_adj[e2] -= 1;
                }
            }
        }
    };
    let unassign = |p: &mut Palette, sat: &mut Vec<usize>, free_adj: &mut Vec<usize>, e: usize| {
        let (u, v) = idx.edges[e];
        let c = p.color[e];
        p.clear(e);
        for x in [u, v] {
            for &(e2, y) in &idx.incident[x] {
                if e2 != e {
                    if p.is_free(y, c) {
                        sat[e2] -= 1;
                    }
                    free_adj[e2] += 1;
                }
            }
        }
    };

    // the star of a maximum-degree vertex needs pairwise distinct colors
    let hub = (0..idx.n).max_by_key(|&x| (idx.incident[x].len(), std::cmp::Reverse(x)));
    let mut used = 0;
    if let Some(hub) = hub {
        if idx.incident[hub].len() > k {
            return Ok(None);
        }
        for (c, &(e, _)) in idx.incident[hub].iter().enumerate() {
            assign(&mut p, &mut sat, &mut free_adj, e, c);
            colored += 1;
            used = c + 1;
        }
    }

    let mut stack: Vec<Frame> = Vec::new();
    loop {
        if colored == m {
            return Ok(Some(p.color));
        }
        if budget.expired() {
            return Err(());
        }
        let mut best = NONE;
        let mut key = (0, 0);
        for e in 0..m {
            if p.color[e] == NONE {
                let kk = (sat[e], free_adj[e]);
                if best == NONE || kk > key {
                    best = e;
                    key = kk;
                }
            }
        }
        stack.push(Frame {
            e: best,
            next: 0,
            used_before: used,
        });
        loop {
            let Some(f) = stack.last() else {
                return Ok(None);
            };
            let (e, start, used_before) = (f.e, f.next, f.used_before);
            if p.color[e] != NONE {
                unassign(&mut p, &mut sat, &mut free_adj, e);
                colored -= 1;
            }
            let (u, v) = idx.edges[e];
            let limit = k.min(used_before + 1);
            match (start..limit).find(|&c| p.is_free(u, c) && p.is_free(v, c)) {
                Some(c) => {
                    stack.last_mut().unwrap().next = c + 1;
                    assign(&mut p, &mut sat, &mut free_adj, e, c);
                    colored += 1;
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

enum Class {
    One(Vec<usize>),
    Two(Vec<usize>),
    Unknown(Vec<usize>),
}

/// Decides whether a connected graph with maximum degree `delta` is
/// `delta`-edge-colorable.
fn classify_component(g: &SimpleGraph, delta: usize, budget: &mut Budget) -> Class {
    let idx = EdgeIndex::new(g);
    let m = idx.edges.len();
    if m > delta * (g.vertex_count() / 2) {
        return Class::Two(misra_gries(g));
    }
    if let Some(col) = kempe_coloring(&idx, delta, budget) {
        return Class::One(col);
    }
    match dsatur_edge_search(&idx, delta, budget) {
        Ok(Some(col)) => Class::One(col),
        Ok(None) => Class::Two(misra_gries(g)),
        Err(()) => Class::Unknown(misra_gries(g)),
    }
}

/// Chromatic index of `g`. The witness colors edges in
/// [`SimpleGraph::edges`] order with `upper` colors.
pub fn edge_chromatic_number(g: &SimpleGraph, budget: &mut Budget) -> Outcome<Vec<usize>> {
    let start = Instant::now();
    let edges = g.edges();
    let delta = g.max_degree();
    if edges.is_empty() {
        return Outcome {
            lower: 0,
            upper: 0,
            witness: Vec::new(),
            elapsed: start.elapsed(),
        };
    }
    let mut coloring = vec![NONE; edges.len()];
    let mut class_two = false;
    let mut unknown = false;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(&comp);
        let sub_col = if sub.max_degree() < delta {
            misra_gries(&sub)
        } else {
            match classify_component(&sub, delta, budget) {
                Class::One(c) => c,
                Class::Two(c) => {
                    class_two = true;
                    c
                }
                Class::Unknown(c) => {
                    unknown = true;
                    c
                }
            }
        };
        for (&(a, b), &c) in sub.edges().iter().zip(&sub_col) {
            let (u, v) = (comp[a], comp[b]);
            let e = edges.binary_search(&(u.min(v), u.max(v))).expect("edge of induced subgraph");
            coloring[e] = c;
        }
    }
    let (lower, upper) = if class_two {
        (delta + 1, delta + 1)
    } else if unknown {
        (delta, delta + 1)
    } else {
        (delta, delta)
    };
    Outcome {
        lower,
        upper,
        witness: coloring,
        elapsed: start.elapsed(),
    }
}

/// Checks that `colors` (indexed like [`SimpleGraph::edges`]) is a proper
/// edge coloring using colors below `k`.
pub fn is_proper_edge_coloring(g: &SimpleGraph, colors: &[usize], k: usize) -> bool {
    let edges = g.edges();
    if colors.len() != edges.len() || colors.iter().any(|&c| c >= k) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    edges
        .iter()
        .zip(colors)
        .all(|(&(u, v), &c)| seen.insert((u, c)) && seen.insert((v, c)))
}
