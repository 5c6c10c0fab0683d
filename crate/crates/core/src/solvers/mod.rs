//! Exact solvers for clique number, chromatic number and chromatic index.
//!
//! Every solver is deterministic and single-threaded. When the time budget
//! runs out it returns the interval it has proven instead of a guess.

pub mod bits;
pub mod clique;
pub mod coloring;
pub mod edge_coloring;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use clique::max_clique;
pub use coloring::{chromatic_number, is_proper_vertex_coloring};
pub use edge_coloring::{edge_chromatic_number, is_proper_edge_coloring, misra_gries};

/// Wall-clock budget shared by one solver run.
#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Budget {
    pub fn new(timeout: Option<Duration>) -> Self {
        Self {
            deadline: timeout.map(|t| Instant::now() + t),
            ticks: 0,
            expired: false,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(None)
    }

    /// Cheap to call in hot loops; reads the clock every 1024 calls.
    #[inline]
    pub fn expired(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 {
            if let Some(d) = self.deadline {
                self.expired = Instant::now() >= d;
            }
        }
        self.expired
    }
}

/// Result of an exact solver: a proven interval plus a witness attaining
/// the bound that the solver can certify constructively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome<W> {
    pub lower: usize,
    pub upper: usize,
    pub witness: W,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl<W> Outcome<W> {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn is_resolved(&self) -> bool {
        self.lower == self.upper
    }
}
