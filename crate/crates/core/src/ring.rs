//! Finite Artinian rings as ordered products of local factors.
//!
//! A local factor is summarized by `t`, its number of proper ideals
//! (the zero ideal included). An ideal of the product is a vector with one
//! [`IdealClass`] per factor; adjacency in the regular graph only ever looks
//! at whether a component is zero, the whole factor, or something in between.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalFactor {
    ideal_count: u32,
    label: Option<String>,
    prime_power: Option<(u64, u32)>,
}

impl LocalFactor {
    /// A local factor with `ideal_count` proper ideals (`t >= 1`).
    pub fn new(ideal_count: u32) -> Result<Self> {
        if ideal_count == 0 {
            return Err(Error::InvalidFactor(
                "a local ring has at least one proper ideal".into(),
            ));
        }
        Ok(Self {
            ideal_count,
            label: None,
            prime_power: None,
        })
    }

    pub fn field() -> Self {
        Self {
            ideal_count: 1,
            label: None,
            prime_power: None,
        }
    }

    /// The factor `Z_{p^k}`, whose proper ideals are `(p^j)` for `1 <= j <= k`.
    pub fn prime_power(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFactor(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidFactor("prime power exponent must be >= 1".into()));
        }
        let label = if k == 1 {
            format!("Z_{p}")
        } else {
            format!("Z_{}", p.pow(k))
        };
        Ok(Self {
            ideal_count: k,
            label: Some(label),
            prime_power: Some((p, k)),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `t`: number of proper ideals, zero ideal included.
    pub fn ideal_count(&self) -> u32 {
        self.ideal_count
    }

    pub fn nontrivial_count(&self) -> u32 {
        self.ideal_count - 1
    }

    pub fn is_field(&self) -> bool {
        self.ideal_count == 1
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn prime_power_parts(&self) -> Option<(u64, u32)> {
        self.prime_power
    }

    /// Number of ideal classes of the factor, the whole ring included (`t + 1`).
    pub fn radix(&self) -> u32 {
        self.ideal_count + 1
    }
}

/// A finite Artinian ring `R_1 x ... x R_n` with every `R_i` local.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    factors: Vec<LocalFactor>,
}

impl RingSpec {
    pub fn new(factors: Vec<LocalFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument(
                "a ring needs at least one local factor".into(),
            ));
        }
        Ok(Self { factors })
    }

    /// Builds a spec from its t-vector, keeping the given factor order.
    pub fn from_profile(profile: &[u32]) -> Result<Self> {
        let factors = profile
            .iter()
            .map(|&t| LocalFactor::new(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    /// Parses `"t1,t2,...,tk"`. A component spelled `inf` is rejected as an
    /// infinite ideal lattice.
    pub fn parse_profile(input: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidProfile {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if input.trim().is_empty() {
            return Err(invalid("empty profile"));
        }
        let mut profile = Vec::new();
        for (i, part) in input.split(',').enumerate() {
            let part = part.trim();
            if matches!(part, "inf" | "infinity" | "∞") {
                return Err(Error::InfiniteLattice { factor: i + 1 });
            }
            let t: u32 = part
                .parse()
                .map_err(|_| invalid(&format!("component {:?} is not a positive integer", part)))?;
            if t == 0 {
                return Err(invalid("components must be positive"));
            }
            profile.push(t);
        }
        Self::from_profile(&profile)
    }

    pub fn factors(&self) -> &[LocalFactor] {
        &self.factors
    }

    /// `n = |Max(R)|`.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// `f(R)`: how many factors are fields.
    pub fn field_count(&self) -> usize {
        self.factors.iter().filter(|f| f.is_field()).count()
    }

    pub fn is_reduced(&self) -> bool {
        self.field_count() == self.factor_count()
    }

    pub fn is_local(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn profile(&self) -> Vec<u32> {
        self.factors.iter().map(LocalFactor::ideal_count).collect()
    }

    /// The t-vector sorted non-increasingly.
    pub fn sorted_profile(&self) -> Vec<u32> {
        let mut p = self.profile();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// `s_i = |{ j : t_j = t_i }|` for every index of the sorted t-vector.
    pub fn multiplicities(&self) -> Vec<usize> {
        let sorted = self.sorted_profile();
        sorted
            .iter()
            .map(|&t| sorted.iter().filter(|&&u| u == t).count())
            .collect()
    }

    /// Number of nontrivial ideals, `prod(t_i + 1) - 2` (saturating).
    pub fn vertex_count(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, f| acc.saturating_mul(f.radix() as u128))
            .saturating_sub(2)
    }

    /// Reorders factors: factor `i` of the result is factor `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.factors.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        Ok(Self {
            factors: perm.iter().map(|&p| self.factors[p].clone()).collect(),
        })
    }

    /// The product `self x factor`.
    pub fn with_factor(&self, factor: LocalFactor) -> Self {
        let mut factors = self.factors.clone();
        factors.push(factor);
        Self { factors }
    }

    /// Position of `ideal` in the mixed-radix enumeration.
    pub fn index_of(&self, ideal: &IdealVector) -> Result<usize> {
        self.check(ideal)?;
        let mut value: u128 = 0;
        for (f, class) in self.factors.iter().zip(&ideal.classes) {
            value = value * f.radix() as u128 + class.digit(f.ideal_count()) as u128;
        }
        Ok((value - 1) as usize)
    }

    /// Inverse of [`RingSpec::index_of`].
    pub fn ideal_at(&self, index: usize) -> Result<IdealVector> {
        if index as u128 >= self.vertex_count() {
            return Err(Error::InvalidIdeal(format!(
                "index {index} out of range for {} vertices",
                self.vertex_count()
            )));
        }
        let mut value = index as u128 + 1;
        let mut classes = vec![IdealClass::Zero; self.factors.len()];
        for (slot, f) in classes.iter_mut().zip(&self.factors).rev() {
            let r = f.radix() as u128;
            *slot = IdealClass::from_digit((value % r) as u32, f.ideal_count());
            value /= r;
        }
        Ok(IdealVector { classes })
    }

    /// Validates that `ideal` is a nontrivial ideal of this ring.
    pub fn check(&self, ideal: &IdealVector) -> Result<()> {
        if ideal.classes.len() != self.factors.len() {
            return Err(Error::SpecMismatch {
                expected: self.factors.len(),
                got: ideal.classes.len(),
            });
        }
        for (i, (f, c)) in self.factors.iter().zip(&ideal.classes).enumerate() {
            if let IdealClass::Nontrivial(j) = *c {
                if j == 0 || j >= f.ideal_count() {
                    return Err(Error::InvalidIdeal(format!(
                        "factor {} has t = {}, so Nontrivial({j}) does not exist",
                        i + 1,
                        f.ideal_count()
                    )));
                }
            }
        }
        if ideal.classes.iter().all(|c| *c == IdealClass::Zero) {
            return Err(Error::InvalidIdeal("the zero ideal is not a vertex".into()));
        }
        if ideal.classes.iter().all(|c| *c == IdealClass::Full) {
            return Err(Error::InvalidIdeal("the whole ring is not a vertex".into()));
        }
        Ok(())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.profile().iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_profile(s)
    }
}

/// The component of an ideal inside one local factor.
///
/// `Nontrivial(1)` stands for the maximal ideal when a concrete lattice is
/// attached. Variant order matches the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdealClass {
    Zero,
    Nontrivial(u32),
    Full,
}

impl IdealClass {
    /// Digit in the mixed-radix encoding of a factor with `t` proper ideals.
    pub fn digit(self, t: u32) -> u32 {
        match self {
            IdealClass::Zero => 0,
            IdealClass::Nontrivial(j) => j,
            IdealClass::Full => t,
        }
    }

    pub fn from_digit(d: u32, t: u32) -> Self {
        if d == 0 {
            IdealClass::Zero
        } else if d >= t {
            IdealClass::Full
        } else {
            IdealClass::Nontrivial(d)
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealClass::Zero => f.write_str("0"),
            IdealClass::Nontrivial(j) => write!(f, "I{j}"),
            IdealClass::Full => f.write_str("R"),
        }
    }
}

/// A nontrivial ideal `I_1 x ... x I_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdealVector {
    classes: Vec<IdealClass>,
}

impl IdealVector {
    pub fn new(spec: &RingSpec, classes: Vec<IdealClass>) -> Result<Self> {
        let v = Self { classes };
        spec.check(&v)?;
        Ok(v)
    }

    /// Builds a vector without checking it against a spec.
    pub fn from_classes(classes: Vec<IdealClass>) -> Self {
        Self { classes }
    }

    pub fn classes(&self) -> &[IdealClass] {
        &self.classes
    }

    pub fn class(&self, factor: usize) -> IdealClass {
        self.classes[factor]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classify(&self) -> IndexSets {
        classify(self)
    }
}

impl fmt::Display for IdealVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The partition of factor indices (0-based) by the class of an ideal there.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexSets {
    /// Factors where the component is the whole ring.
    pub full: Vec<usize>,
    /// Factors where the component is `(0)`.
    pub zero: Vec<usize>,
    /// Factors where the component is a nontrivial ideal.
    pub nontrivial: Vec<usize>,
}

pub fn classify(ideal: &IdealVector) -> IndexSets {
    let mut sets = IndexSets::default();
    for (k, c) in ideal.classes.iter().enumerate() {
        match c {
            IdealClass::Full => sets.full.push(k),
            IdealClass::Zero => sets.zero.push(k),
            IdealClass::Nontrivial(_) => sets.nontrivial.push(k),
        }
    }
    sets
}

/// Every nontrivial ideal of `spec`, in mixed-radix order with the first
/// factor as the most significant digit.
pub fn enumerate_ideals(spec: &RingSpec) -> Vec<IdealVector> {
    let n = spec.factor_count();
    let ts = spec.profile();
    let mut digits = vec![0u32; n];
    let mut out = Vec::with_capacity(spec.vertex_count().min(1 << 20) as usize);
    loop {
        // odometer increment, last factor fastest
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if digits[k] < ts[k] {
                digits[k] += 1;
                break;
            }
            digits[k] = 0;
        }
        if digits.iter().zip(&ts).all(|(d, t)| d == t) {
            return out;
        }
        out.push(IdealVector {
            classes: digits
                .iter()
                .zip(&ts)
                .map(|(&d, &t)| IdealClass::from_digit(d, t))
                .collect(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use IdealClass::*;

    fn spec(p: &[u32]) -> RingSpec {
        RingSpec::from_profile(p).unwrap()
    }

    #[test]
    fn counts_for_small_profiles() {
        assert_eq!(enumerate_ideals(&spec(&[2, 2])).len(), 7);
        assert_eq!(enumerate_ideals(&spec(&[1, 1, 1])).len(), 6);
        assert_eq!(spec(&[2, 2]).vertex_count(), 7);
        assert_eq!(spec(&[1]).vertex_count(), 0);
        assert!(enumerate_ideals(&spec(&[1])).is_empty());
    }

    #[test]
    fn two_fields_only_have_supports() {
        let v = enumerate_ideals(&spec(&[1, 1]));
        assert_eq!(
            v,
            vec![
                IdealVector::from_classes(vec![Zero, Full]),
                IdealVector::from_classes(vec![Full, Zero]),
            ]
        );
    }

    #[test]
    fn enumeration_is_sorted_and_indexable() {
        let s = spec(&[2, 3, 1]);
        let v = enumerate_ideals(&s);
        assert_eq!(v.len() as u128, s.vertex_count());
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        for (i, ideal) in v.iter().enumerate() {
            assert_eq!(s.index_of(ideal).unwrap(), i);
            assert_eq!(&s.ideal_at(i).unwrap(), ideal);
        }
    }

    #[test]
    fn classify_examples() {
        let s = spec(&[2, 3, 2]);
        let i = IdealVector::new(&s, vec![Full, Nontrivial(1), Zero]).unwrap();
        let sets = classify(&i);
        assert_eq!(sets.full, vec![0]);
        assert_eq!(sets.nontrivial, vec![1]);
        assert_eq!(sets.zero, vec![2]);

        let sets = classify(&IdealVector::from_classes(vec![Full, Zero]));
        assert_eq!((sets.full, sets.zero), (vec![0], vec![1]));
        assert!(sets.nontrivial.is_empty());

        let sets = classify(&IdealVector::from_classes(vec![Nontrivial(1), Nontrivial(1)]));
        assert_eq!(sets.nontrivial, vec![0, 1]);
        assert!(sets.full.is_empty() && sets.zero.is_empty());
    }

    #[test]
    fn rejects_trivial_and_malformed_ideals() {
        let s = spec(&[2, 1]);
        assert!(IdealVector::new(&s, vec![Zero, Zero]).is_err());
        assert!(IdealVector::new(&s, vec![Full, Full]).is_err());
        assert!(IdealVector::new(&s, vec![Full, Nontrivial(1)]).is_err());
        assert!(IdealVector::new(&s, vec![Nontrivial(2), Zero]).is_err());
        assert!(matches!(
            IdealVector::new(&s, vec![Full]),
            Err(Error::SpecMismatch { .. })
        ));
    }

    #[test]
    fn profile_parsing() {
        let s: RingSpec = "2, 3,1".parse().unwrap();
        assert_eq!(s.profile(), vec![2, 3, 1]);
        assert_eq!(s.to_string(), "2,3,1");
        assert_eq!(s.field_count(), 1);
        assert!(!s.is_reduced());
        assert!("1,1,1".parse::<RingSpec>().unwrap().is_reduced());
        assert!("".parse::<RingSpec>().is_err());
        assert!("2,0".parse::<RingSpec>().is_err());
        assert!("2,x".parse::<RingSpec>().is_err());
        assert_eq!(
            "2,inf".parse::<RingSpec>(),
            Err(Error::InfiniteLattice { factor: 2 })
        );
    }

    #[test]
    fn multiplicity_statistics() {
        let s = spec(&[2, 3, 2, 1]);
        assert_eq!(s.sorted_profile(), vec![3, 2, 2, 1]);
        assert_eq!(s.multiplicities(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn prime_power_factor() {
        let f = LocalFactor::prime_power(3, 2).unwrap();
        assert_eq!(f.ideal_count(), 2);
        assert_eq!(f.label(), Some("Z_9"));
        assert!(LocalFactor::prime_power(4, 1).is_err());
        assert!(LocalFactor::prime_power(5, 0).is_err());
        assert!(LocalFactor::new(0).is_err());
        assert!(LocalFactor::field().is_field());
    }

    #[test]
    fn permutation_checks() {
        let s = spec(&[3, 2, 1]);
        assert_eq!(s.permuted(&[2, 0, 1]).unwrap().profile(), vec![1, 3, 2]);
        assert!(s.permuted(&[0, 0, 1]).is_err());
        assert!(s.permuted(&[0, 1]).is_err());
    }
}
