//! The regular digraph of ideals and its underlying simple graph.
//!
//! There is an arc `I -> J` when `I` contains a `J`-regular element. Over a
//! product of local Artinian rings this happens exactly when, in every
//! factor, `I` is the whole factor or `J` is zero there.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::{enumerate_ideals, IdealClass, IdealVector, RingSpec};
use crate::zn::ZnContext;

/// Largest vertex count [`build_digraph`] accepts unless told otherwise.
pub const DEFAULT_VERTEX_LIMIT: usize = 50_000;

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!(
                    "bad edge ({u}, {v}) for a graph on {n} vertices"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        SimpleGraph { adj }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotMode {
    /// Directed arcs of the regular digraph.
    Digraph,
    /// Undirected edges of the underlying graph.
    Graph,
}

/// The regular digraph of ideals together with its underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegDigraph {
    name: String,
    vertices: Vec<IdealVector>,
    labels: Vec<String>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    underlying: SimpleGraph,
}

impl RegDigraph {
    fn from_out_lists(name: String, vertices: Vec<IdealVector>, labels: Vec<String>, out: Vec<Vec<usize>>) -> Self {
        let n = vertices.len();
        let mut inc = vec![Vec::new(); n];
        for (u, list) in out.iter().enumerate() {
            for &v in list {
                inc[v].push(u);
            }
        }
        let adj = (0..n)
            .map(|v| {
                let mut list: Vec<usize> = out[v].iter().chain(&inc[v]).copied().collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        Self {
            name,
            vertices,
            labels,
            out,
            inc,
            underlying: SimpleGraph { adj },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[IdealVector] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// All arcs, ordered by source then target.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn underlying(&self) -> &SimpleGraph {
        &self.underlying
    }

    /// Replaces vertex labels, e.g. with divisors of `n`.
    pub fn with_labels(mut self, name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertices.len()
            )));
        }
        self.name = name.into();
        self.labels = labels;
        Ok(self)
    }

    /// No pair of vertices carries arcs in both directions.
    pub fn is_antisymmetric(&self) -> bool {
        self.out
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| !self.has_arc(v, u)))
    }

    /// A topological order, or `None` if the digraph has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn to_dot(&self, mode: DotMode) -> String {
        let (kind, sep) = match mode {
            DotMode::Digraph => ("digraph", "->"),
            DotMode::Graph => ("graph", "--"),
        };
        let mut s = String::new();
        let _ = writeln!(s, "{kind} \"{}\" {{", escape(&self.name));
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{}\"];", escape(label));
        }
        let pairs = match mode {
            DotMode::Digraph => self.arcs(),
            DotMode::Graph => self.underlying.edges(),
        };
        for (u, v) in pairs {
            let _ = writeln!(s, "  v{u} {sep} v{v};");
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Whether `i` contains a `j`-regular element: in every factor, `i` is the
/// whole factor or `j` is zero.
pub fn has_arc_structural(spec: &RingSpec, i: &IdealVector, j: &IdealVector) -> Result<bool> {
    spec.check(i)?;
    spec.check(j)?;
    Ok(arc_rule(i, j))
}

fn arc_rule(i: &IdealVector, j: &IdealVector) -> bool {
    i.classes()
        .iter()
        .zip(j.classes())
        .all(|(a, b)| *a == IdealClass::Full || *b == IdealClass::Zero)
}

pub fn build_digraph(spec: &RingSpec) -> Result<RegDigraph> {
    build_digraph_with_limit(spec, DEFAULT_VERTEX_LIMIT)
}

/// Builds the digraph by generating each out-neighborhood directly: the
/// targets of `I` are the ideals that vanish outside the factors where `I`
/// is full.
pub fn build_digraph_with_limit(spec: &RingSpec, limit: usize) -> Result<RegDigraph> {
    let vertices = vertex_list(spec, limit)?;
    let ts = spec.profile();
    let n = ts.len();
    // place value of each factor's digit
    let mut weight = vec![1usize; n];
    for k in (0..n.saturating_sub(1)).rev() {
        weight[k] = weight[k + 1] * (ts[k + 1] as usize + 1);
    }
    let out = vertices
        .iter()
        .enumerate()
        .map(|(self_index, ideal)| {
            let free: Vec<usize> = classify_full(ideal);
            let mut targets = Vec::new();
            if free.is_empty() {
                return targets;
            }
            let mut digits = vec![0u32; free.len()];
            'odometer: loop {
                let mut pos = free.len();
                loop {
                    if pos == 0 {
                        break 'odometer;
                    }
                    pos -= 1;
                    if digits[pos] < ts[free[pos]] {
                        digits[pos] += 1;
                        break;
                    }
                    digits[pos] = 0;
                }
                let value: usize = free.iter().zip(&digits).map(|(&k, &d)| weight[k] * d as usize).sum();
                let index = value - 1;
                if index != self_index {
                    targets.push(index);
                }
            }
            targets
        })
        .collect();
    let labels = vertices.iter().map(ToString::to_string).collect();
    Ok(RegDigraph::from_out_lists(
        format!("Γ_reg({spec})"),
        vertices,
        labels,
        out,
    ))
}

fn classify_full(ideal: &IdealVector) -> Vec<usize> {
    ideal
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == IdealClass::Full)
        .map(|(k, _)| k)
        .collect()
}

fn vertex_list(spec: &RingSpec, limit: usize) -> Result<Vec<IdealVector>> {
    let count = spec.vertex_count();
    if count > limit as u128 {
        return Err(Error::GraphTooLarge {
            vertices: count,
            limit,
        });
    }
    Ok(enumerate_ideals(spec))
}

/// Builds the digraph by testing [`has_arc_structural`] on every ordered pair.
pub fn build_digraph_pairwise(spec: &RingSpec, limit: usize) -> Result<RegDigraph> {
    let vertices = vertex_list(spec, limit)?;
    let out = vertices
        .iter()
        .enumerate()
        .map(|(u, a)| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(v, b)| u != v && arc_rule(a, b))
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    let labels = vertices.iter().map(ToString::to_string).collect();
    Ok(RegDigraph::from_out_lists(
        format!("Γ_reg({spec})"),
        vertices,
        labels,
        out,
    ))
}

/// The structural digraph of `Z_n`, labeled by divisors.
pub fn build_digraph_for_zn(ctx: &ZnContext, limit: usize) -> Result<RegDigraph> {
    let g = build_digraph_with_limit(ctx.spec(), limit)?;
    let labels = divisor_labels(ctx, g.vertices())?;
    g.with_labels(format!("Γ_reg(Z_{})", ctx.modulus()), labels)
}

/// The digraph of `Z_n` from the annihilator criterion on divisors, in the
/// same vertex order as the structural construction.
pub fn build_digraph_hom(ctx: &ZnContext, limit: usize) -> Result<RegDigraph> {
    let vertices = vertex_list(ctx.spec(), limit)?;
    let divs = vertices
        .iter()
        .map(|v| ctx.ideal_to_divisor(v))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![Vec::new(); divs.len()];
    for (u, &a) in divs.iter().enumerate() {
        for (v, &b) in divs.iter().enumerate() {
            if u != v && ctx.has_arc(a, b)? {
                out[u].push(v);
            }
        }
    }
    let labels = divs.iter().map(u64::to_string).collect();
    Ok(RegDigraph::from_out_lists(
        format!("Γ_reg(Z_{})", ctx.modulus()),
        vertices,
        labels,
        out,
    ))
}

fn divisor_labels(ctx: &ZnContext, vertices: &[IdealVector]) -> Result<Vec<String>> {
    vertices
        .iter()
        .map(|v| ctx.ideal_to_divisor(v).map(|d| d.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::factor_modulus;
    use IdealClass::*;

    fn spec(p: &[u32]) -> RingSpec {
        RingSpec::from_profile(p).unwrap()
    }

    #[test]
    fn structural_rule_examples() {
        let s = spec(&[2, 2]);
        let iv = |c: Vec<IdealClass>| IdealVector::new(&s, c).unwrap();
        assert!(has_arc_structural(&s, &iv(vec![Full, Nontrivial(1)]), &iv(vec![Full, Zero])).unwrap());
        let isolated = iv(vec![Nontrivial(1), Nontrivial(1)]);
        for other in enumerate_ideals(&s) {
            if other != isolated {
                assert!(!has_arc_structural(&s, &isolated, &other).unwrap());
                assert!(!has_arc_structural(&s, &other, &isolated).unwrap());
            }
        }
        let a = iv(vec![Full, Zero]);
        let b = iv(vec![Zero, Full]);
        assert!(!has_arc_structural(&s, &a, &b).unwrap());
        assert!(!has_arc_structural(&s, &b, &a).unwrap());
    }

    #[test]
    fn structural_rule_rejects_foreign_ideals() {
        let s = spec(&[2, 2]);
        let a = IdealVector::from_classes(vec![Full, Zero, Zero]);
        let b = IdealVector::from_classes(vec![Full, Zero]);
        assert!(matches!(
            has_arc_structural(&s, &a, &b),
            Err(Error::SpecMismatch { .. })
        ));
    }

    #[test]
    fn z36_shape() {
        let g = build_digraph(&spec(&[2, 2])).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.underlying().edge_count(), 6);
        let sizes: Vec<usize> = g.underlying().components().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 3]);
    }

    #[test]
    fn two_fields_edgeless() {
        let g = build_digraph(&spec(&[1, 1])).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn generated_matches_pairwise() {
        for p in [&[2, 2][..], &[3, 1, 2], &[1, 1, 1, 1], &[4], &[2, 3, 2, 1]] {
            let s = spec(p);
            assert_eq!(
                build_digraph(&s).unwrap(),
                build_digraph_pairwise(&s, DEFAULT_VERTEX_LIMIT).unwrap()
            );
        }
    }

    #[test]
    fn size_limit() {
        let err = build_digraph_with_limit(&spec(&[3, 3, 3]), 10).unwrap_err();
        assert_eq!(
            err,
            Error::GraphTooLarge {
                vertices: 62,
                limit: 10
            }
        );
    }

    #[test]
    fn hom_digraph_matches_structural_z36() {
        let ctx = factor_modulus(36).unwrap();
        let a = build_digraph_for_zn(&ctx, 100).unwrap();
        let b = build_digraph_hom(&ctx, 100).unwrap();
        assert_eq!(a.arcs(), b.arcs());
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn dot_output() {
        let ctx = factor_modulus(36).unwrap();
        let g = build_digraph_for_zn(&ctx, 100).unwrap();
        let dot = g.to_dot(DotMode::Digraph);
        assert!(dot.starts_with("digraph \"Γ_reg(Z_36)\" {"));
        assert_eq!(dot.matches("->").count(), 6);
        let undirected = g.to_dot(DotMode::Graph);
        assert_eq!(undirected.matches("--").count(), 6);
    }

    #[test]
    fn components_and_induced() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        let h = g.induced(&[1, 2, 0]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        assert!(SimpleGraph::from_edges(2, [(0, 0)]).is_err());
    }
}
