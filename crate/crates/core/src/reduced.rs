//! Reduced rings: products of fields and the Boolean-lattice model.
//!
//! For a product of `n` fields every ideal is determined by the set of
//! factors where it is full, so the vertices are the proper nonempty subsets
//! of `{0, .., n-1}` and `A -> B` exactly when `B` is a proper subset of `A`.

use crate::error::{Error, Result};
use crate::graph::{build_digraph_with_limit, SimpleGraph, DEFAULT_VERTEX_LIMIT};
use crate::invariants::Predictions;
use crate::ring::{IdealClass, IdealVector, RingSpec};
use crate::zn::ZnContext;

/// Proper-subset digraph on the proper nonempty subsets of an `n`-set.
/// Subsets are bit masks, bit `k` standing for factor `k`.
#[derive(Debug, Clone)]
pub struct BooleanGraph {
    n: usize,
    masks: Vec<u64>,
    arcs: Vec<(usize, usize)>,
    graph: SimpleGraph,
}

pub fn boolean_graph(n: usize) -> Result<BooleanGraph> {
    boolean_graph_with_limit(n, DEFAULT_VERTEX_LIMIT)
}

pub fn boolean_graph_with_limit(n: usize, limit: usize) -> Result<BooleanGraph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "a reduced ring needs at least 2 factors, got {n}"
        )));
    }
    if n >= 64 || (1u128 << n) - 2 > limit as u128 {
        return Err(Error::GraphTooLarge {
            vertices: if n >= 127 { u128::MAX } else { (1u128 << n) - 2 },
            limit,
        });
    }
    let full = (1u64 << n) - 1;
    let masks: Vec<u64> = (1..full).collect();
    let index = |m: u64| (m - 1) as usize;
    let mut arcs = Vec::new();
    for &a in &masks {
        // proper nonempty submasks of a, descending
        let mut b = (a - 1) & a;
        while b != 0 {
            arcs.push((index(a), index(b)));
            b = (b - 1) & a;
        }
    }
    arcs.sort_unstable();
    let graph = SimpleGraph::from_edges(masks.len(), arcs.iter().copied())?;
    Ok(BooleanGraph { n, masks, arcs, graph })
}

impl BooleanGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex masks in vertex order (ascending).
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Arcs from superset to subset, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// The ideal of the product of `n` fields that is full exactly on `mask`.
    pub fn ideal_of(&self, mask: u64) -> IdealVector {
        IdealVector::from_classes(
            (0..self.n)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        IdealClass::Full
                    } else {
                        IdealClass::Zero
                    }
                })
                .collect(),
        )
    }

    /// Checks that `mask -> ideal` is an isomorphism onto the structural
    /// digraph of the product of `n` fields.
    pub fn matches_structural(&self) -> Result<bool> {
        let spec = RingSpec::from_profile(&vec![1; self.n])?;
        let g = build_digraph_with_limit(&spec, self.masks.len())?;
        if g.vertex_count() != self.masks.len() {
            return Ok(false);
        }
        let map = self
            .masks
            .iter()
            .map(|&m| spec.index_of(&self.ideal_of(m)))
            .collect::<Result<Vec<_>>>()?;
        let mut mapped: Vec<(usize, usize)> = self.arcs.iter().map(|&(a, b)| (map[a], map[b])).collect();
        mapped.sort_unstable();
        Ok(mapped == g.arcs())
    }
}

/// The prime divisors of a square-free modulus, one per minimal prime ideal.
pub fn minimal_primes_zn(ctx: &ZnContext) -> Result<Vec<u64>> {
    if ctx.factorization().iter().any(|&(_, k)| k > 1) {
        return Err(Error::InvalidArgument(format!(
            "Z_{} is not reduced",
            ctx.modulus()
        )));
    }
    Ok(ctx.factorization().iter().map(|&(p, _)| p).collect())
}

/// Closed-form invariants of the product of `n` fields: `ω = χ = n - 1`
/// and `χ' = 2^(n-1) - 2` (which is `0` at `n = 2`).
pub fn reduced_invariants(n: usize) -> Result<Predictions> {
    if !(2..64).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "reduced invariants need 2 <= n < 64, got {n}"
        )));
    }
    Ok(Predictions {
        omega: n - 1,
        chi: n - 1,
        chi_prime: (1usize << (n - 1)) - 2,
    })
}
