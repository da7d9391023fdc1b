//! Independent witness checks.
//!
//! Nothing here uses the scanners, the cached element classes or the power
//! trails. Nilpotency is `x^order == 0` by repeated squaring and unit
//! membership is a naive search for a two-sided inverse.

use super::{PredicateId, Verdict, Witness};
use crate::ring::FiniteRing;

fn power(ring: &FiniteRing, x: usize, mut e: u64) -> usize {
    let mut acc = ring.one();
    let mut base = x;
    while e > 0 {
        if e % 2 == 1 {
            acc = ring.mul(acc, base);
        }
        base = ring.mul(base, base);
        e /= 2;
    }
    acc
}

/// The nilpotency index never exceeds the order.
pub fn nilpotent(ring: &FiniteRing, x: usize) -> bool {
    power(ring, x, ring.order() as u64) == ring.zero()
}

pub fn unit(ring: &FiniteRing, x: usize) -> bool {
    ring.elements().any(|y| ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one())
}

fn idempotent(ring: &FiniteRing, e: usize) -> bool {
    ring.mul(e, e) == e
}

fn in_right_multiples(ring: &FiniteRing, a: usize, x: usize) -> bool {
    ring.elements().any(|r| ring.mul(a, r) == x)
}

fn characteristic(ring: &FiniteRing) -> usize {
    (1..=ring.order()).find(|&c| ring.scalar(c as i64, ring.one()) == ring.zero()).unwrap_or(0)
}

/// True when element `a` violates predicate `id`.
pub fn violates(ring: &FiniteRing, id: PredicateId, a: usize) -> bool {
    let one = ring.one();
    let sq = ring.mul(a, a);
    let cube = ring.mul(sq, a);
    match id {
        PredicateId::YaqubNilClean => !nilpotent(ring, ring.sub(a, cube)) && !nilpotent(ring, ring.add(a, cube)),
        PredicateId::StronglyNilClean => !nilpotent(ring, ring.sub(a, sq)),
        PredicateId::Strongly2NilClean => !nilpotent(ring, ring.sub(a, cube)),
        PredicateId::StronglyWeaklyNilClean => !nilpotent(ring, ring.sub(a, sq)) && !nilpotent(ring, ring.add(a, sq)),
        PredicateId::Hirano => {
            unit(ring, a) && !nilpotent(ring, ring.sub(one, sq)) && !nilpotent(ring, ring.add(one, sq))
        }
        PredicateId::TwoUu => unit(ring, a) && !nilpotent(ring, ring.sub(one, sq)),
        PredicateId::Exchange => !ring.elements().any(|e| {
            idempotent(ring, e)
                && in_right_multiples(ring, a, e)
                && in_right_multiples(ring, ring.sub(one, a), ring.sub(one, e))
        }),
        PredicateId::Clean => !ring.elements().any(|e| idempotent(ring, e) && unit(ring, ring.sub(a, e))),
        PredicateId::StronglyClean => {
            !ring.elements().any(|e| idempotent(ring, e) && ring.commute(a, e) && unit(ring, ring.sub(a, e)))
        }
        PredicateId::Periodic => false,
        PredicateId::Boolean | PredicateId::SquareIdentity => sq != a,
        PredicateId::YaqubRing | PredicateId::CubeIdentity => cube != a,
        PredicateId::IsoZ5 => false,
        PredicateId::CubeSignedIdentity => cube != a && cube != ring.neg(a),
        PredicateId::FifthPowerIdentity => power(ring, a, 5) != a,
        PredicateId::FifthPowerNil => !nilpotent(ring, ring.sub(a, power(ring, a, 5))),
    }
}

/// Re-derives a verdict's evidence. `Ok(())` means the witness checks out.
pub fn recheck(ring: &FiniteRing, id: PredicateId, verdict: &Verdict) -> Result<(), String> {
    match (&verdict.witness, verdict.holds) {
        (Some(Witness::Counterexample { element, .. }), false) => {
            if violates(ring, id, *element) {
                Ok(())
            } else {
                Err(format!("{} does not violate {id}", ring.render_element(*element)))
            }
        }
        (Some(Witness::Invariant { name, expected, .. }), false) => {
            let found = match name.as_str() {
                "characteristic" => characteristic(ring),
                "order" => ring.order(),
                _ => return Err(format!("unknown invariant {name}")),
            };
            if found.to_string() != *expected {
                Ok(())
            } else {
                Err(format!("{name} is {found} after all"))
            }
        }
        (Some(Witness::Decompositions { entries }), true) => {
            if entries.len() != ring.order() {
                return Err("decompositions do not cover the carrier".into());
            }
            for entry in entries {
                let (a, e) = (entry.element, entry.idempotent);
                if !idempotent(ring, e) {
                    return Err(format!("{} is not idempotent", ring.render_element(e)));
                }
                let ok = match id {
                    PredicateId::Exchange => {
                        in_right_multiples(ring, a, e)
                            && in_right_multiples(ring, ring.sub(ring.one(), a), ring.sub(ring.one(), e))
                    }
                    PredicateId::Clean | PredicateId::StronglyClean => {
                        let u = entry.unit.unwrap_or(usize::MAX);
                        u < ring.order()
                            && ring.add(e, u) == a
                            && unit(ring, u)
                            && (id == PredicateId::Clean || ring.commute(e, u))
                    }
                    _ => false,
                };
                if !ok {
                    return Err(format!("bad decomposition for {}", ring.render_element(a)));
                }
            }
            Ok(())
        }
        (_, true) => Ok(()),
        (w, false) => Err(format!("false verdict without a checkable witness: {w:?}")),
    }
}
