//! Two-sided ideals, ideal enumeration and quotient rings.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::span::AdditiveSpan;
use super::{Arith, DerivedKind, FiniteRing, RingExpr, RingId};
use crate::error::{AlgebraError, Result};

/// A two-sided ideal, validated against its ring on construction.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingId,
    members: FixedBitSet,
    /// additive generators
    generators: Vec<usize>,
    len: usize,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Ideal {
    fn from_span(ring: &FiniteRing, span: AdditiveSpan<'_>) -> Ideal {
        let len = span.len();
        let (members, generators) = span.into_parts();
        Ideal { ring: ring.id(), members, generators, len }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal::from_span(ring, AdditiveSpan::new(ring))
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal::generated_by(ring, &[ring.one()])
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn generated_by(ring: &FiniteRing, gens: &[usize]) -> Ideal {
        let mut span = AdditiveSpan::new(ring);
        for &g in gens {
            span.add_generator(g);
        }
        let ring_gens = ring.additive_generators();
        let mut done = 0;
        while done < span.generators().len() {
            let g = span.generators()[done];
            for &r in ring_gens {
                for p in [ring.mul(r, g), ring.mul(g, r)] {
                    if !span.contains(p) {
                        span.add_generator(p);
                    }
                }
            }
            done += 1;
        }
        Ideal::from_span(ring, span)
    }

    /// Validates an explicit element set.
    pub fn from_elements(ring: &FiniteRing, elements: &[usize]) -> Result<Ideal> {
        let mut set = FixedBitSet::with_capacity(ring.order());
        for &e in elements {
            if e >= ring.order() {
                return Err(AlgebraError::NotAnIdeal(format!("index {e} out of range")));
            }
            set.insert(e);
        }
        if !set.contains(ring.zero()) {
            return Err(AlgebraError::NotAnIdeal("does not contain zero".into()));
        }
        let mut span = AdditiveSpan::new(ring);
        for e in set.ones() {
            if !span.contains(e) {
                span.add_generator(e);
            }
            if span.len() > set.count_ones(..) {
                break;
            }
        }
        if span.len() != set.count_ones(..) {
            return Err(AlgebraError::NotAnIdeal("not closed under addition".into()));
        }
        for &g in span.generators() {
            for &r in ring.additive_generators() {
                if !set.contains(ring.mul(r, g)) || !set.contains(ring.mul(g, r)) {
                    return Err(AlgebraError::NotAnIdeal(format!(
                        "not closed under multiplication: {} * {}",
                        ring.render_element(r),
                        ring.render_element(g)
                    )));
                }
            }
        }
        Ok(Ideal::from_span(ring, span))
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len == 1
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Sorted element indices.
    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn sum(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let mut span = AdditiveSpan::new(ring);
        for &g in self.generators.iter().chain(&other.generators) {
            span.add_generator(g);
        }
        Ideal::from_span(ring, span)
    }

    pub fn intersection(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let elems: Vec<usize> = members.ones().collect();
        Ideal::from_elements(ring, &elems).expect("intersection of ideals is an ideal")
    }
}

/// Direct check of the ideal axioms on an arbitrary subset. Cubic-free but
/// quadratic in the order; meant for small rings and tests.
pub fn is_ideal_exhaustive(ring: &FiniteRing, set: &FixedBitSet) -> bool {
    if !set.contains(ring.zero()) {
        return false;
    }
    let members: Vec<usize> = set.ones().collect();
    for &a in &members {
        if !set.contains(ring.neg(a)) {
            return false;
        }
        for &b in &members {
            if !set.contains(ring.add(a, b)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) || !set.contains(ring.mul(a, r)) {
                return false;
            }
        }
    }
    true
}

/// Every two-sided ideal, as sums of principal ideals.
///
/// Sorted by size, then by sorted member list.
pub fn all_ideals(ring: &FiniteRing, guard: usize) -> Result<Vec<Ideal>> {
    if ring.order() > guard {
        return Err(AlgebraError::SizeGuard { what: "ideal enumeration", order: ring.order(), guard });
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut ideals: Vec<Ideal> = Vec::new();
    for a in ring.elements() {
        let principal = Ideal::generated_by(ring, &[a]);
        if seen.insert(principal.members.clone()) {
            ideals.push(principal);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let s = ideals[i].sum(&ideals[j], ring);
            if seen.insert(s.members.clone()) {
                ideals.push(s);
            }
        }
        i += 1;
    }
    ideals.sort_by(|a, b| a.len.cmp(&b.len).then_with(|| a.elements().cmp(&b.elements())));
    Ok(ideals)
}

/// A quotient ring together with the canonical surjection.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    /// coset index of every parent element
    pub surjection: Vec<usize>,
}

/// `R / I` with the smallest index of each coset as its representative.
pub fn quotient(ring: &FiniteRing, ideal: &Ideal) -> Result<QuotientRing> {
    if ideal.ring != ring.id() {
        return Err(AlgebraError::NotAnIdeal("ideal belongs to a different ring".into()));
    }
    let members: Vec<usize> = ideal.members.ones().collect();
    let mut coset_of = vec![u32::MAX; ring.order()];
    let mut reps = Vec::with_capacity(ring.order() / ideal.len());
    for x in ring.elements() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &i in &members {
            coset_of[ring.add(x, i)] = id;
        }
    }
    let zero = coset_of[ring.zero()] as usize;
    let one = coset_of[ring.one()] as usize;
    let lits = ideal.generators.iter().map(|&g| ring.element_literal(g)).collect();
    let expr = RingExpr::Quotient(Box::new(ring.expr().clone()), lits);
    let surjection = coset_of.iter().map(|&c| c as usize).collect();
    let order = reps.len();
    let arith =
        Arith::Derived { parent: ring.clone(), kind: DerivedKind::Quotient, to_parent: reps, from_parent: coset_of };
    Ok(QuotientRing { ring: FiniteRing::assemble(arith, order, zero, one, expr, ring.options()), surjection })
}
