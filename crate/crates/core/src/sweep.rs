//! Enumeration of canonical ring specs for sweeps.
//!
//! Permuting factors gives an isomorphic digraph, so each family is
//! represented once by its non-increasing t-vector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub max_factors: usize,
    pub max_t: u32,
    pub max_vertices: usize,
}

impl SweepBounds {
    pub fn new(max_factors: usize, max_t: u32, max_vertices: usize) -> Result<Self> {
        if max_factors == 0 || max_t == 0 || max_vertices == 0 {
            return Err(Error::InvalidArgument(format!(
                "sweep bounds must be positive (factors {max_factors}, t {max_t}, vertices {max_vertices})"
            )));
        }
        Ok(Self {
            max_factors,
            max_t,
            max_vertices,
        })
    }
}

/// Every non-increasing t-vector within `bounds`, ordered by length and
/// then lexicographically. The single field is skipped since it has no
/// nontrivial ideals.
pub fn canonical_specs(bounds: &SweepBounds) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 1..=bounds.max_factors {
        let mut profiles = Vec::new();
        let mut current = Vec::with_capacity(n);
        extend(n, bounds.max_t, &mut current, &mut profiles);
        profiles.sort();
        for p in profiles {
            if p == [1] {
                continue;
            }
            let spec = RingSpec::from_profile(&p).expect("profile entries are positive");
            if spec.vertex_count() <= bounds.max_vertices as u128 {
                out.push(spec);
            }
        }
    }
    out
}

fn extend(n: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for t in 1..=cap {
        current.push(t);
        extend(n, t, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profiles(b: SweepBounds) -> Vec<Vec<u32>> {
        canonical_specs(&b).iter().map(RingSpec::profile).collect()
    }

    #[test]
    fn small_bounds() {
        let b = SweepBounds::new(3, 2, 1000).unwrap();
        let expected: Vec<Vec<u32>> = vec![
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![2, 2, 1],
            vec![2, 2, 2],
        ];
        assert_eq!(profiles(b), expected);
    }

    #[test]
    fn default_acceptance_family() {
        let specs = canonical_specs(&SweepBounds::new(4, 4, 600).unwrap());
        assert_eq!(specs.len(), 67);
        assert!(specs.iter().all(|s| s.vertex_count() <= 600));
        assert!(!specs.iter().any(|s| s.profile() == [4, 4, 4, 4]));
    }

    #[test]
    fn vertex_cap_filters() {
        let all = profiles(SweepBounds::new(2, 3, 1000).unwrap());
        let capped = profiles(SweepBounds::new(2, 3, 7).unwrap());
        assert!(capped.iter().all(|p| all.contains(p)));
        assert!(capped.contains(&vec![2, 2]));
        assert!(!capped.contains(&vec![3, 2]));
    }

    #[test]
    fn rejects_zero_bounds() {
        assert!(SweepBounds::new(0, 2, 10).is_err());
    }
}
