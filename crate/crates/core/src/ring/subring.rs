//! Generated subrings and corner rings.

use fixedbitset::FixedBitSet;

use super::span::AdditiveSpan;
use super::{Arith, DerivedKind, Element, FiniteRing, RingExpr};
use crate::error::{AlgebraError, Result};

/// A ring carried by a subset of a parent ring.
#[derive(Debug, Clone)]
pub struct Embedded {
    pub ring: FiniteRing,
    /// parent index of each element of `ring`
    pub embedding: Vec<usize>,
}

/// Builds a derived ring on a sorted subset of `parent` closed under the ring operations.
pub(crate) fn derived_on_subset(
    parent: &FiniteRing,
    kind: DerivedKind,
    members: Vec<usize>,
    one_in_parent: usize,
    expr: RingExpr,
) -> Result<FiniteRing> {
    let mut from_parent = vec![u32::MAX; parent.order()];
    for (local, &p) in members.iter().enumerate() {
        from_parent[p] = local as u32;
    }
    let zero = from_parent[parent.zero()];
    let one = from_parent[one_in_parent];
    if zero == u32::MAX || one == u32::MAX {
        return Err(AlgebraError::MalformedExpr("subset does not contain zero and identity".into()));
    }
    let order = members.len();
    let arith = Arith::Derived { parent: parent.clone(), kind, to_parent: members, from_parent };
    Ok(FiniteRing::assemble(arith, order, zero as usize, one as usize, expr, parent.options()))
}

/// Additive span of `seeds` closed under multiplication.
pub(crate) fn multiplicative_closure<'a>(ring: &'a FiniteRing, seeds: &[usize]) -> AdditiveSpan<'a> {
    let mut span = AdditiveSpan::new(ring);
    for &s in seeds {
        span.add_generator(s);
    }
    // products of additive generators suffice by bilinearity
    let mut done = 0;
    while done < span.generators().len() {
        let g = span.generators()[done];
        let mut j = 0;
        while j <= done {
            let h = span.generators()[j];
            for p in [ring.mul(g, h), ring.mul(h, g)] {
                if !span.contains(p) {
                    span.add_generator(p);
                }
            }
            j += 1;
        }
        done += 1;
    }
    span
}

/// Smallest subring containing `gens` (and 1 when `include_one` is set).
///
/// With `include_one` the result is `Z[gens]` and shares the identity of `ring`.
/// Without it, the closure must contain its own identity; the recorded
/// expression then names the unital closure and is only descriptive.
pub fn generated_subring(ring: &FiniteRing, gens: &[Element], include_one: bool) -> Result<Embedded> {
    let idx: Vec<usize> = gens.iter().map(|&g| ring.check(g)).collect::<Result<_>>()?;
    subring_from_indices(ring, &idx, include_one)
}

pub fn subring_from_indices(ring: &FiniteRing, gens: &[usize], include_one: bool) -> Result<Embedded> {
    let mut seeds = gens.to_vec();
    if include_one {
        seeds.insert(0, ring.one());
    }
    let span = multiplicative_closure(ring, &seeds);
    let mut members: Vec<usize> = span.list().to_vec();
    members.sort_unstable();
    let one = if include_one {
        ring.one()
    } else {
        let add_gens = span.generators();
        members
            .iter()
            .copied()
            .find(|&u| add_gens.iter().all(|&g| ring.mul(u, g) == g && ring.mul(g, u) == g))
            .ok_or(AlgebraError::NoIdentity)?
    };
    let lits = gens.iter().map(|&g| ring.element_literal(g)).collect();
    let expr = RingExpr::Subring(Box::new(ring.expr().clone()), lits);
    let sub = derived_on_subset(ring, DerivedKind::Subring, members.clone(), one, expr)?;
    Ok(Embedded { ring: sub, embedding: members })
}

/// `Z[a]`, the unital subring generated by one element.
pub fn integer_polynomials_in(ring: &FiniteRing, a: usize) -> Result<Embedded> {
    subring_from_indices(ring, &[a], true)
}

/// Membership bitset of `Z[a]` without materializing a ring.
pub fn integer_polynomials_set(ring: &FiniteRing, a: usize) -> FixedBitSet {
    multiplicative_closure(ring, &[ring.one(), a]).into_parts().0
}

/// The corner ring `eRe` with identity `e`.
pub fn corner(ring: &FiniteRing, e: usize) -> Result<Embedded> {
    if ring.mul(e, e) != e {
        return Err(AlgebraError::NotIdempotent(ring.render_element(e)));
    }
    let mut seen = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        seen.insert(ring.mul(ring.mul(e, r), e));
    }
    let members: Vec<usize> = seen.ones().collect();
    let expr = RingExpr::Corner(Box::new(ring.expr().clone()), ring.element_literal(e));
    let c = derived_on_subset(ring, DerivedKind::Corner, members.clone(), e, expr)?;
    Ok(Embedded { ring: c, embedding: members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build::build;
    use crate::ring::parse::{parse_element, parse_ring_expr};
    use crate::ring::BuildOptions;

    fn ring(text: &str) -> FiniteRing {
        build(&parse_ring_expr(text).unwrap(), &BuildOptions::default()).unwrap()
    }

    /// Closure by naive saturation: add all sums, negatives and products until stable.
    fn naive_closure(r: &FiniteRing, seeds: &[usize]) -> Vec<usize> {
        let mut set: std::collections::BTreeSet<usize> = seeds.iter().copied().collect();
        set.insert(r.zero());
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                set.insert(r.neg(a));
                for &b in &cur {
                    set.insert(r.add(a, b));
                    set.insert(r.mul(a, b));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    #[test]
    fn z5_generated_by_two_is_everything() {
        let r = ring("Z/5");
        let s = generated_subring(&r, &[r.element(2).unwrap()], true).unwrap();
        assert_eq!(s.ring.order(), 5);
    }

    #[test]
    fn nilpotent_matrix_generates_four_elements() {
        let r = ring("M2(Z/2)");
        let n = r.resolve(&parse_element("[[0,1],[0,0]]").unwrap()).unwrap();
        let s = subring_from_indices(&r, &[n], true).unwrap();
        let expected = naive_closure(&r, &[r.one(), n]);
        assert_eq!(s.embedding, expected);
        assert_eq!(s.ring.order(), 4);
        assert!(s.ring.is_commutative());
        let rendered: Vec<_> = s.embedding.iter().map(|&i| r.render_element(i)).collect();
        assert_eq!(rendered, vec!["[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[1,0],[0,1]]", "[[1,1],[0,1]]"]);
    }

    #[test]
    fn empty_generators_give_prime_subring() {
        for text in ["Z/12", "M2(Z/3)", "Z/4 x Z/6", "Z/25[x]/(x^2)"] {
            let r = ring(text);
            let s = subring_from_indices(&r, &[], true).unwrap();
            assert_eq!(s.ring.order() as u64, r.characteristic(), "{text}");
        }
    }

    #[test]
    fn closure_matches_naive_saturation() {
        let r = ring("T2(Z/4)");
        for a in (0..r.order()).step_by(5) {
            for b in (0..r.order()).step_by(11) {
                let s = subring_from_indices(&r, &[a, b], true).unwrap();
                assert_eq!(s.embedding, naive_closure(&r, &[r.one(), a, b]));
                assert!(s.ring.audit_axioms().is_ok());
            }
        }
    }

    #[test]
    fn generation_is_idempotent() {
        let r = ring("Z/4 x Z/6");
        let s = subring_from_indices(&r, &[r.resolve(&parse_element("(2,3)").unwrap()).unwrap()], true).unwrap();
        let again = subring_from_indices(&r, &s.embedding, true).unwrap();
        assert_eq!(again.embedding, s.embedding);
    }

    #[test]
    fn non_unital_generation_finds_local_identity() {
        let r = ring("Z/6");
        let s = subring_from_indices(&r, &[3], false).unwrap();
        assert_eq!(s.embedding, vec![0, 3]);
        assert_eq!(s.embedding[s.ring.one()], 3);
        let m = ring("M2(Z/2)");
        let n = m.resolve(&parse_element("[[0,1],[0,0]]").unwrap()).unwrap();
        assert_eq!(subring_from_indices(&m, &[n], false).unwrap_err(), AlgebraError::NoIdentity);
    }

    #[test]
    fn corners() {
        let r = ring("M2(Z/2)");
        let e = r.resolve(&parse_element("[[1,0],[0,0]]").unwrap()).unwrap();
        let c = corner(&r, e).unwrap();
        assert_eq!(c.ring.order(), 2);
        assert!(c.ring.audit_axioms().is_ok());
        assert_eq!(c.ring.label(), "corner(M2(Z/2); [[1,0],[0,0]])");
        assert!(matches!(
            corner(&r, r.resolve(&parse_element("[[0,1],[0,0]]").unwrap()).unwrap()),
            Err(AlgebraError::NotIdempotent(_))
        ));
        let z6 = ring("Z/6");
        let c3 = corner(&z6, 4).unwrap();
        assert_eq!(c3.embedding, vec![0, 2, 4]);
        assert_eq!(c3.ring.characteristic(), 3);
    }
}
