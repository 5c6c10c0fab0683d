//! The concrete rings `Z_n` and their CRT decomposition into `Z_{p^k}` factors.
//!
//! Ideals of `Z_n` are the principal ideals `(d)` with `d | n`; nontrivial
//! ones have `1 < d < n`. Under the Chinese remainder isomorphism `(d)` maps
//! to the vector whose `p`-component is `(p^{v_p(d)})` inside `Z_{p^k}`.

use crate::arith::{divisors, factorize, lcm, valuation};
use crate::error::{Error, Result};
use crate::ring::{IdealClass, IdealVector, LocalFactor, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnContext {
    modulus: u64,
    factorization: Vec<(u64, u32)>,
    spec: RingSpec,
    divisors: Vec<u64>,
}

/// Factors `n` and attaches the divisor/ideal-vector correspondence.
///
/// Fields `Z_p` (and `n < 2`) are rejected: the graph is only defined for
/// rings with zero-divisors.
pub fn factor_modulus(n: u64) -> Result<ZnContext> {
    if n < 2 {
        return Err(Error::DomainRing(n));
    }
    let factorization = factorize(n);
    if factorization.len() == 1 && factorization[0].1 == 1 {
        return Err(Error::DomainRing(n));
    }
    let factors = factorization
        .iter()
        .map(|&(p, k)| LocalFactor::prime_power(p, k))
        .collect::<Result<Vec<_>>>()?;
    let spec = RingSpec::new(factors)?;
    let divisors = divisors(n)
        .into_iter()
        .filter(|&d| d != 1 && d != n)
        .collect();
    Ok(ZnContext {
        modulus: n,
        factorization,
        spec,
        divisors,
    })
}

impl ZnContext {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `(p, k)` pairs, primes ascending.
    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    /// The induced spec: one factor `Z_{p^k}` (with `t = k`) per prime.
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Generators `d` of the nontrivial ideals, ascending.
    pub fn nontrivial_divisors(&self) -> &[u64] {
        &self.divisors
    }

    fn check_divisor(&self, d: u64) -> Result<()> {
        if d <= 1 || d >= self.modulus || self.modulus % d != 0 {
            return Err(Error::NotADivisor {
                divisor: d,
                modulus: self.modulus,
            });
        }
        Ok(())
    }

    /// The image of `(d)` as an ideal vector over [`ZnContext::spec`].
    pub fn divisor_to_ideal(&self, d: u64) -> Result<IdealVector> {
        self.check_divisor(d)?;
        let classes = self
            .factorization
            .iter()
            .map(|&(p, k)| match valuation(d, p) {
                0 => IdealClass::Full,
                v if v >= k => IdealClass::Zero,
                v => IdealClass::Nontrivial(v),
            })
            .collect();
        IdealVector::new(&self.spec, classes)
    }

    /// Inverse of [`ZnContext::divisor_to_ideal`].
    pub fn ideal_to_divisor(&self, ideal: &IdealVector) -> Result<u64> {
        self.spec.check(ideal)?;
        Ok(self
            .factorization
            .iter()
            .zip(ideal.classes())
            .map(|(&(p, k), class)| match *class {
                IdealClass::Full => 1,
                IdealClass::Zero => p.pow(k),
                IdealClass::Nontrivial(j) => p.pow(j),
            })
            .product())
    }

    fn check_pair(&self, a: u64, b: u64) -> Result<()> {
        self.check_divisor(a)?;
        self.check_divisor(b)?;
        if a == b {
            return Err(Error::SameIdeal(a));
        }
        Ok(())
    }

    /// Arc `(a) -> (b)`: `(a)` contains a `(b)`-regular element.
    ///
    /// `Z_n` is Noetherian, so this is `Hom((Z_n)/(a), (b)) = 0`, i.e.
    /// `(b) ∩ Ann((a)) = (b) ∩ (n/a) = (lcm(b, n/a))` is zero.
    pub fn has_arc(&self, a: u64, b: u64) -> Result<bool> {
        self.check_pair(a, b)?;
        Ok(lcm(b, self.modulus / a) % self.modulus == 0)
    }

    /// Smallest `r` in `(a)` with `r * x != 0` for every nonzero `x` in `(b)`,
    /// found by scanning elements. Quadratic in `n`.
    pub fn regular_element_witness(&self, a: u64, b: u64) -> Result<Option<u64>> {
        self.check_pair(a, b)?;
        let n = self.modulus as u128;
        let witness = (0..self.modulus / a)
            .map(|k| k * a)
            .find(|&r| (1..self.modulus / b).all(|j| (r as u128 * (j * b) as u128) % n != 0));
        Ok(witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use IdealClass::*;

    #[test]
    fn z36_decomposition() {
        let ctx = factor_modulus(36).unwrap();
        assert_eq!(ctx.factorization(), &[(2, 2), (3, 2)]);
        assert_eq!(ctx.spec().profile(), vec![2, 2]);
        assert_eq!(ctx.spec().vertex_count(), 7);
        assert_eq!(ctx.nontrivial_divisors(), &[2, 3, 4, 6, 9, 12, 18]);
    }

    #[test]
    fn squarefree_is_reduced() {
        let ctx = factor_modulus(30).unwrap();
        assert_eq!(ctx.spec().profile(), vec![1, 1, 1]);
        assert!(ctx.spec().is_reduced());
        assert_eq!(ctx.spec().vertex_count(), 6);
    }

    #[test]
    fn fields_and_units_are_rejected() {
        for n in [0, 1, 2, 7, 13, 97] {
            let err = factor_modulus(n).unwrap_err();
            assert_eq!(err, Error::DomainRing(n));
            assert!(err.to_string().contains("domain ring"));
        }
        assert!(factor_modulus(4).is_ok());
    }

    #[test]
    fn divisor_classes() {
        let ctx = factor_modulus(36).unwrap();
        let v = |d| ctx.divisor_to_ideal(d).unwrap().classes().to_vec();
        assert_eq!(v(9), vec![Full, Zero]);
        assert_eq!(v(3), vec![Full, Nontrivial(1)]);
        assert_eq!(v(18), vec![Nontrivial(1), Zero]);
        assert_eq!(v(6), vec![Nontrivial(1), Nontrivial(1)]);
        assert_eq!(v(4), vec![Zero, Full]);
        for &d in ctx.nontrivial_divisors() {
            assert_eq!(ctx.ideal_to_divisor(&ctx.divisor_to_ideal(d).unwrap()).unwrap(), d);
        }
        assert!(ctx.divisor_to_ideal(5).is_err());
        assert!(ctx.divisor_to_ideal(36).is_err());
        assert!(ctx.divisor_to_ideal(1).is_err());
    }

    #[test]
    fn hom_criterion_examples() {
        let ctx = factor_modulus(36).unwrap();
        assert!(ctx.has_arc(3, 18).unwrap());
        assert!(!ctx.has_arc(18, 3).unwrap());
        assert!(!ctx.has_arc(6, 4).unwrap());
        assert!(ctx.has_arc(6, 6).is_err());
        assert!(ctx.has_arc(5, 6).is_err());
    }

    #[test]
    fn witness_examples() {
        let ctx = factor_modulus(36).unwrap();
        let r = ctx.regular_element_witness(3, 18).unwrap().expect("witness");
        assert_eq!(r % 3, 0);
        // (18) = {0, 18}
        assert_ne!((r * 18) % 36, 0);
        assert_eq!(ctx.regular_element_witness(18, 3).unwrap(), None);
        assert_eq!(ctx.regular_element_witness(6, 6), Err(Error::SameIdeal(6)));
    }
}
