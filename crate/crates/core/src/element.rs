//! Per-element structure: nilpotents, units, idempotents, tripotents and the
//! Jacobson radical.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::ring::ideal::Ideal;
use crate::ring::span::AdditiveSpan;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NilpotencyResult {
    pub is_nilpotent: bool,
    /// smallest `k >= 1` with `a^k = 0`
    pub index: Option<u32>,
}

/// Powers `a, a^2, ..` up to and including the first repeated value.
pub fn power_trail(ring: &FiniteRing, a: usize) -> Vec<usize> {
    let mut seen = HashMap::new();
    let mut trail = Vec::new();
    let mut x = a;
    loop {
        trail.push(x);
        if seen.insert(x, trail.len()).is_some() {
            return trail;
        }
        x = ring.mul(x, a);
    }
}

/// First collision `a^m = a^n` with `m < n`, both minimal.
pub fn periodic_exponents(ring: &FiniteRing, a: usize) -> (u32, u32) {
    let mut seen = HashMap::new();
    let mut x = a;
    let mut k = 1u32;
    loop {
        if let Some(&m) = seen.get(&x) {
            return (m, k);
        }
        seen.insert(x, k);
        x = ring.mul(x, a);
        k += 1;
    }
}

/// Nilpotency with exact index, by following powers until zero or a repeat.
///
/// Once a power repeats without having hit zero, the trail is periodic and
/// never reaches zero.
pub fn nilpotency(ring: &FiniteRing, a: usize) -> NilpotencyResult {
    let mut seen = HashMap::new();
    let mut x = a;
    let mut k = 1u32;
    loop {
        if x == ring.zero() {
            return NilpotencyResult { is_nilpotent: true, index: Some(k) };
        }
        if seen.insert(x, k).is_some() {
            return NilpotencyResult { is_nilpotent: false, index: None };
        }
        x = ring.mul(x, a);
        k += 1;
    }
}

/// Two-sided inverse by linear scan.
pub fn unit_inverse(ring: &FiniteRing, a: usize) -> Option<usize> {
    let b = ring.elements().find(|&b| ring.mul(a, b) == ring.one())?;
    assert_eq!(ring.mul(b, a), ring.one(), "right inverse is not a left inverse");
    Some(b)
}

/// Exact element classes of a ring, as bitsets over element indices.
#[derive(Debug, Clone)]
pub struct SpecialElements {
    pub nilpotents: FixedBitSet,
    pub units: FixedBitSet,
    pub idempotents: FixedBitSet,
    pub tripotents: FixedBitSet,
    pub central_idempotents: FixedBitSet,
}

impl SpecialElements {
    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotents.contains(a)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.units.contains(a)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PowerClass {
    Unknown,
    Nilpotent,
    Unit,
    Neither,
}

/// Cached on the ring after the first call.
pub fn special_elements(ring: &FiniteRing) -> &SpecialElements {
    ring.special_cell().get_or_init(|| compute_special(ring))
}

fn compute_special(ring: &FiniteRing) -> SpecialElements {
    let n = ring.order();
    // every power of a shares its class (nilpotent, unit, neither) with a
    let mut class = vec![PowerClass::Unknown; n];
    let mut stamp = vec![usize::MAX; n];
    let mut trail = Vec::new();
    for a in 0..n {
        if class[a] != PowerClass::Unknown {
            continue;
        }
        trail.clear();
        let mut x = a;
        let found = loop {
            if x == ring.zero() && n > 1 {
                break PowerClass::Nilpotent;
            }
            if x == ring.one() {
                break if n == 1 { PowerClass::Nilpotent } else { PowerClass::Unit };
            }
            if class[x] != PowerClass::Unknown {
                break class[x];
            }
            if stamp[x] == a {
                break PowerClass::Neither;
            }
            stamp[x] = a;
            trail.push(x);
            x = ring.mul(x, a);
        };
        for &t in &trail {
            class[t] = found;
        }
        class[a] = found;
    }
    let mut nilpotents = FixedBitSet::with_capacity(n);
    let mut units = FixedBitSet::with_capacity(n);
    let mut idempotents = FixedBitSet::with_capacity(n);
    let mut tripotents = FixedBitSet::with_capacity(n);
    let mut central_idempotents = FixedBitSet::with_capacity(n);
    for (a, &c) in class.iter().enumerate() {
        match c {
            PowerClass::Nilpotent => nilpotents.insert(a),
            PowerClass::Unit => units.insert(a),
            _ => {}
        }
        if n == 1 {
            units.insert(a);
        }
        let sq = ring.mul(a, a);
        if sq == a {
            idempotents.insert(a);
            if ring.is_central(a) {
                central_idempotents.insert(a);
            }
        }
        if ring.mul(sq, a) == a {
            tripotents.insert(a);
        }
    }
    SpecialElements { nilpotents, units, idempotents, tripotents, central_idempotents }
}

/// The Jacobson radical with nil diagnostics.
#[derive(Debug, Clone)]
pub struct RadicalResult {
    pub ideal: Ideal,
    pub is_nil: bool,
    /// smallest `m` with `J^m = 0`, if any
    pub nilpotency_exponent: Option<u32>,
}

impl RadicalResult {
    pub fn elements(&self) -> Vec<usize> {
        self.ideal.elements()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.ideal.contains(a)
    }
}

/// `J(R)`, cached on the ring after the first call.
pub fn jacobson_radical(ring: &FiniteRing) -> &RadicalResult {
    ring.radical_cell().get_or_init(|| {
        let members = radical_members(ring);
        finish_radical(ring, &members)
    })
}

fn quasi_regular_left(ring: &FiniteRing, special: &SpecialElements, a: usize) -> bool {
    let one = ring.one();
    ring.elements().all(|r| special.is_unit(ring.sub(one, ring.mul(r, a))))
}

/// Sweep over non-units using that `J` is an additive subgroup: accepted
/// elements join a span whose members need no test, and a rejected `a`
/// rules out the whole coset `a + span`.
fn radical_members(ring: &FiniteRing) -> Vec<usize> {
    let special = special_elements(ring);
    let mut span = AdditiveSpan::new(ring);
    let mut rejected = FixedBitSet::with_capacity(ring.order());
    for a in ring.elements() {
        if span.contains(a) || rejected.contains(a) || special.is_unit(a) {
            continue;
        }
        if quasi_regular_left(ring, special, a) {
            span.add_generator(a);
        } else {
            for &s in span.list() {
                rejected.insert(ring.add(a, s));
            }
        }
    }
    let mut members = span.list().to_vec();
    members.sort_unstable();
    members
}

/// Definitional route: tests every element against every multiplier.
pub fn jacobson_radical_exhaustive(ring: &FiniteRing) -> Vec<usize> {
    let special = special_elements(ring);
    ring.elements().filter(|&a| quasi_regular_left(ring, special, a)).collect()
}

fn finish_radical(ring: &FiniteRing, members: &[usize]) -> RadicalResult {
    let ideal = Ideal::from_elements(ring, members)
        .unwrap_or_else(|e| panic!("quasi-regular set of {} is not an ideal: {e}", ring.label()));
    let special = special_elements(ring);
    let is_nil = members.iter().all(|&a| special.is_nilpotent(a));
    RadicalResult { nilpotency_exponent: ideal_nilpotency_exponent(ring, &ideal), ideal, is_nil }
}

/// Smallest `m` with `I^m = 0`, computed on additive generators.
pub fn ideal_nilpotency_exponent(ring: &FiniteRing, ideal: &Ideal) -> Option<u32> {
    let base = ideal.generators().to_vec();
    let mut current = base.clone();
    let mut m = 1u32;
    loop {
        if current.is_empty() {
            return Some(m);
        }
        if m as usize > ring.order() {
            return None;
        }
        let mut span = AdditiveSpan::new(ring);
        for &x in &current {
            for &y in &base {
                let p = ring.mul(x, y);
                if !span.contains(p) {
                    span.add_generator(p);
                }
            }
        }
        current = span.generators().to_vec();
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build::build_str;
    use crate::ring::parse::parse_element;
    use crate::ring::BuildOptions;

    fn ring(text: &str) -> FiniteRing {
        build_str(text, &BuildOptions::default()).unwrap()
    }

    fn lit(r: &FiniteRing, text: &str) -> usize {
        r.resolve(&parse_element(text).unwrap()).unwrap()
    }

    #[test]
    fn nilpotency_examples() {
        let z4 = ring("Z/4");
        assert_eq!(nilpotency(&z4, 0), NilpotencyResult { is_nilpotent: true, index: Some(1) });
        assert_eq!(nilpotency(&z4, 2), NilpotencyResult { is_nilpotent: true, index: Some(2) });
        assert_eq!(nilpotency(&ring("Z/5"), 2), NilpotencyResult { is_nilpotent: false, index: None });
        let r = ring("Z/2[x]/(x^5)");
        assert_eq!(nilpotency(&r, lit(&r, "x")).index, Some(5));
        assert_eq!(nilpotency(&r, lit(&r, "x^2+x^3")).index, Some(3));
    }

    #[test]
    fn nilpotency_index_is_minimal() {
        for text in ["Z/64", "T3(Z/2)", "Z/9 x Z/8"] {
            let r = ring(text);
            for a in r.elements() {
                match nilpotency(&r, a).index {
                    Some(k) => {
                        assert_eq!(r.pow(a, k as u64), r.zero());
                        assert!(k == 1 || r.pow(a, k as u64 - 1) != r.zero());
                    }
                    None => assert_ne!(r.pow(a, r.order() as u64), r.zero()),
                }
            }
        }
    }

    #[test]
    fn periodic_examples() {
        let z4 = ring("Z/4");
        assert_eq!(periodic_exponents(&z4, 2), (2, 3));
        assert_eq!(periodic_exponents(&z4, 1), (1, 2));
        assert_eq!(periodic_exponents(&ring("Z/5"), 2), (1, 5));
        assert_eq!(power_trail(&ring("Z/5"), 2), vec![2, 4, 3, 1, 2]);
    }

    #[test]
    fn inverses() {
        assert_eq!(unit_inverse(&ring("Z/10"), 3), Some(7));
        assert_eq!(unit_inverse(&ring("Z/4"), 2), None);
        let m = ring("M2(Z/2)");
        let inv = unit_inverse(&m, lit(&m, "[[0,1],[1,1]]")).unwrap();
        assert_eq!(m.render_element(inv), "[[1,1],[1,0]]");
    }

    #[test]
    fn special_sets() {
        let z6 = ring("Z/6");
        assert_eq!(special_elements(&z6).idempotents.ones().collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        assert_eq!(special_elements(&ring("Z/5")).tripotents.ones().collect::<Vec<_>>(), vec![0, 1, 4]);
        assert_eq!(special_elements(&ring("M2(Z/2)")).units.count_ones(..), 6);
        let m = ring("M2(Z/2)");
        assert_eq!(special_elements(&m).central_idempotents.ones().collect::<Vec<_>>(), vec![0, 9]);
    }

    #[test]
    fn special_sets_match_direct_definitions() {
        for text in ["Z/36", "T2(Z/4)", "M2(Z/3)", "Z/4 x Z/9", "Z/3[x]/(x^3)"] {
            let r = ring(text);
            let s = special_elements(&r);
            for a in r.elements() {
                assert_eq!(s.is_nilpotent(a), r.pow(a, r.order() as u64) == r.zero(), "{text} {a}");
                assert_eq!(s.is_unit(a), r.elements().any(|b| r.mul(a, b) == r.one()), "{text} {a}");
                assert_eq!(s.tripotents.contains(a), r.pow(a, 3) == a);
                if s.idempotents.contains(a) {
                    assert!(s.tripotents.contains(a));
                }
                if s.is_unit(a) && s.tripotents.contains(a) {
                    assert_eq!(r.mul(a, a), r.one());
                }
            }
        }
    }

    #[test]
    fn nilpotents_absorb_commuting_factors() {
        for text in ["Z/8 x Z/2", "T2(Z/3)", "Z/2[x]/(x^3)", "M2(Z/2)"] {
            let r = ring(text);
            let s = special_elements(&r);
            for a in s.nilpotents.ones() {
                for b in r.elements() {
                    if r.commute(a, b) {
                        assert!(s.is_nilpotent(r.mul(a, b)));
                    }
                }
            }
            for u in s.units.ones() {
                for v in s.units.ones() {
                    assert!(s.is_unit(r.mul(u, v)));
                }
            }
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(jacobson_radical(&ring("Z/12")).elements(), vec![0, 6]);
        assert_eq!(jacobson_radical(&ring("Z/5")).elements(), vec![0]);
        let t = ring("T2(Z/2)");
        let j = jacobson_radical(&t);
        let rendered: Vec<_> = j.elements().iter().map(|&a| t.render_element(a)).collect();
        assert_eq!(rendered, vec!["[[0,0],[0,0]]", "[[0,1],[0,0]]"]);
        assert!(j.is_nil);
        assert_eq!(j.nilpotency_exponent, Some(2));
        let z8 = ring("Z/8");
        let z8 = jacobson_radical(&z8);
        assert_eq!(z8.nilpotency_exponent, Some(3));
    }

    /// `J` straight from the definition, sharing nothing with the sweep.
    fn radical_oracle(r: &FiniteRing) -> Vec<usize> {
        let is_unit = |x: usize| r.elements().any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one());
        r.elements()
            .filter(|&a| {
                r.elements().all(|x| is_unit(r.sub(r.one(), r.mul(x, a))) && is_unit(r.sub(r.one(), r.mul(a, x))))
            })
            .collect()
    }

    #[test]
    fn sweep_matches_oracle() {
        for text in ["Z/72", "T2(Z/4)", "M2(Z/2)", "Z/4 x Z/9", "Z/2[x]/(x^3)", "Z/3 x T2(Z/2)", "Z/4[x]/(x^2+1)"] {
            let r = ring(text);
            let oracle = radical_oracle(&r);
            assert_eq!(jacobson_radical(&r).elements(), oracle, "{text}");
            assert_eq!(jacobson_radical_exhaustive(&r), oracle, "{text}");
        }
    }

    #[test]
    fn radical_of_residue_ring_is_zero() {
        for text in ["Z/72", "T3(Z/2)", "Z/9[x]/(x^2)", "Z/4 x M2(Z/2)"] {
            let r = ring(text);
            let j = jacobson_radical(&r);
            assert!(j.is_nil);
            let q = crate::ring::ideal::quotient(&r, &j.ideal).unwrap();
            assert!(jacobson_radical(&q.ring).ideal.is_zero(), "{text}");
        }
    }

    #[test]
    fn radical_on_tables_and_on_demand_agree() {
        let expr = crate::ring::parse::parse_ring_expr("T2(Z/9)").unwrap();
        let dense = crate::ring::build::build(&expr, &BuildOptions::default()).unwrap();
        let lazy = crate::ring::build::build(&expr, &BuildOptions { dense_max: 0, ..Default::default() }).unwrap();
        assert_eq!(jacobson_radical(&dense).elements(), jacobson_radical(&lazy).elements());
        assert_eq!(jacobson_radical(&dense).ideal.len(), 81);
    }
}
