//! Regular graphs of ideals of finite Artinian commutative rings.
//!
//! A finite Artinian ring is modeled as a product of local factors
//! ([`RingSpec`]); its nontrivial ideals are the vertices of the regular
//! digraph ([`RegDigraph`]). The [`invariants`] module evaluates closed-form
//! predictions for degrees, clique number, chromatic number and chromatic
//! index, and checks them against the exact solvers in [`solvers`].

pub mod arith;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod reduced;
pub mod ring;
pub mod solvers;
pub mod sweep;
pub mod zn;

pub use error::{Error, Result};
pub use graph::{
    build_digraph, build_digraph_with_limit, has_arc_structural, DotMode, RegDigraph, SimpleGraph,
    DEFAULT_VERTEX_LIMIT,
};

pub use invariants::{analyze, analyze_zn, AnalyzeOptions, InvariantReport, Mismatch, Quantity};
pub use ring::{classify, enumerate_ideals, IdealClass, IdealVector, IndexSets, LocalFactor, RingSpec};
pub use sweep::{canonical_specs, SweepBounds};
pub use zn::{factor_modulus, ZnContext};
