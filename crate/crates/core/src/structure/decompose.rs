//! Splitting a ring along the prime factors of its characteristic.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ring::subring::{corner, Embedded};
use crate::ring::FiniteRing;

/// Prime-power factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Debug, Clone)]
pub struct PrimeComponent {
    pub prime: u64,
    pub exponent: u32,
    /// central idempotent of `R` cutting out this component
    pub idempotent: usize,
    pub ring: FiniteRing,
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub components: Vec<PrimeComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub prime: u64,
    pub exponent: u32,
    pub idempotent: String,
    pub order: usize,
}

impl Decomposition {
    pub fn idempotents(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.idempotent).collect()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.prime).collect()
    }

    pub fn summary(&self, ring: &FiniteRing) -> Vec<ComponentSummary> {
        self.components
            .iter()
            .map(|c| ComponentSummary {
                prime: c.prime,
                exponent: c.exponent,
                idempotent: ring.render_element(c.idempotent),
                order: c.ring.order(),
            })
            .collect()
    }
}

/// Checks that the idempotents are central, pairwise orthogonal and sum to 1.
pub fn verify_certificate(ring: &FiniteRing, idempotents: &[usize]) -> std::result::Result<(), String> {
    let mut sum = ring.zero();
    for (i, &e) in idempotents.iter().enumerate() {
        if ring.mul(e, e) != e {
            return Err(format!("{} is not idempotent", ring.render_element(e)));
        }
        if !ring.is_central(e) {
            return Err(format!("{} is not central", ring.render_element(e)));
        }
        for &f in &idempotents[i + 1..] {
            if ring.mul(e, f) != ring.zero() || ring.mul(f, e) != ring.zero() {
                return Err(format!("{} and {} are not orthogonal", ring.render_element(e), ring.render_element(f)));
            }
        }
        sum = ring.add(sum, e);
    }
    if sum != ring.one() {
        return Err(format!("idempotents sum to {}", ring.render_element(sum)));
    }
    Ok(())
}

/// `R = e_1 R x .. x e_k R` with one factor per prime dividing the
/// characteristic. Each `e_i` is the integer `s_i * (c / q_i)` for the Bezout
/// coefficient `s_i` of `(c / q_i) mod q_i`, times 1.
pub fn prime_component_decomposition(ring: &FiniteRing) -> Result<Decomposition> {
    if ring.order() < 2 {
        return Err(AlgebraError::DegenerateRing);
    }
    let c = ring.characteristic();
    let mut components = Vec::new();
    for (p, k) in factorize(c) {
        let q = p.pow(k);
        let m = c / q;
        let g = (m as i128).extended_gcd(&(q as i128));
        debug_assert_eq!(g.gcd, 1);
        let coeff = (g.x * m as i128).rem_euclid(c as i128) as i64;
        let e = ring.from_int(coeff);
        let Embedded { ring: factor, embedding } = corner(ring, e)?;
        // the component equals R / q R
        let q_multiples = ring.elements().map(|x| ring.scalar(q as i64, x)).collect::<std::collections::BTreeSet<_>>();
        assert_eq!(factor.order() * q_multiples.len(), ring.order(), "component of {} at {p}", ring.label());
        components.push(PrimeComponent { prime: p, exponent: k, idempotent: e, ring: factor, embedding });
    }
    let d = Decomposition { components };
    verify_certificate(ring, &d.idempotents()).map_err(AlgebraError::ClassificationContradiction)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build::build_str;
    use crate::ring::BuildOptions;

    fn ring(text: &str) -> FiniteRing {
        build_str(text, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn z6_splits_at_2_and_3() {
        let d = prime_component_decomposition(&ring("Z/6")).unwrap();
        assert_eq!(d.primes(), vec![2, 3]);
        assert_eq!(d.idempotents(), vec![3, 4]);
        assert_eq!(d.components[0].ring.order(), 2);
        assert_eq!(d.components[1].ring.order(), 3);
    }

    #[test]
    fn prime_power_is_one_factor() {
        let d = prime_component_decomposition(&ring("Z/8")).unwrap();
        assert_eq!(d.idempotents(), vec![1]);
        assert_eq!(d.components[0].ring.order(), 8);
    }

    #[test]
    fn z30_has_three_factors() {
        let d = prime_component_decomposition(&ring("Z/30")).unwrap();
        assert_eq!(d.idempotents(), vec![15, 10, 6]);
        let orders: Vec<_> = d.components.iter().map(|c| c.ring.order()).collect();
        assert_eq!(orders, vec![2, 3, 5]);
    }

    #[test]
    fn structured_rings() {
        for text in ["Z/4 x Z/9", "T2(Z/6)", "Z/12[x]/(x^2)", "M2(Z/6)"] {
            let r = ring(text);
            let d = prime_component_decomposition(&r).unwrap();
            let product: usize = d.components.iter().map(|c| c.ring.order()).product();
            assert_eq!(product, r.order(), "{text}");
            assert!(verify_certificate(&r, &d.idempotents()).is_ok());
        }
    }

    #[test]
    fn certificate_rejects_bad_lists() {
        let r = ring("Z/6");
        assert!(verify_certificate(&r, &[3]).is_err());
        assert!(verify_certificate(&r, &[3, 3, 4]).is_err());
        assert!(verify_certificate(&r, &[1, 2]).is_err());
    }
}
