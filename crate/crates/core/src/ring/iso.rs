//! Targeted isomorphism tests and central splittings.

use super::subring::corner;
use super::FiniteRing;
use crate::element::special_elements;
use crate::error::Result;
use crate::predicates::{ScanStats, Verdict, Witness};

/// True iff `ring` is isomorphic to `Z/n`.
///
/// A unital ring whose characteristic equals its order is additively cyclic
/// on 1, which pins down the multiplication.
pub fn is_iso_zmod(ring: &FiniteRing, n: u64) -> bool {
    ring.order() as u64 == n && ring.characteristic() == n
}

/// Searches for a central idempotent `e` with `eRe` satisfying `left` and
/// `(1-e)R(1-e)` satisfying `right`.
///
/// Nontrivial central idempotents are tried first in ascending order. Only
/// if none works are `e = 0` and `e = 1` tried; there the order-1 corner is
/// ignored, the other side must satisfy its predicate, and the witness is
/// flagged degenerate.
pub fn has_central_split<L, Rp>(ring: &FiniteRing, left: L, right: Rp) -> Result<Verdict>
where
    L: Fn(&FiniteRing) -> Result<bool>,
    Rp: Fn(&FiniteRing) -> Result<bool>,
{
    let special = special_elements(ring);
    let central: Vec<usize> = special.central_idempotents.ones().collect();
    let mut stats = ScanStats { candidates: central.len(), scanned: 0, failures: 0 };
    let verdict = |holds, witness, stats| Verdict { predicate_id: "central_split".into(), holds, witness, stats };
    for &e in &central {
        if e == ring.zero() || e == ring.one() {
            continue;
        }
        stats.scanned += 1;
        let f = ring.sub(ring.one(), e);
        if left(&corner(ring, e)?.ring)? && right(&corner(ring, f)?.ring)? {
            let w = Witness::Idempotent { element: e, rendered: ring.render_element(e), degenerate: false };
            return Ok(verdict(true, Some(w), stats));
        }
    }
    if ring.order() > 1 {
        for (e, whole_side_ok) in [(ring.zero(), right(ring)?), (ring.one(), left(ring)?)] {
            stats.scanned += 1;
            if whole_side_ok {
                let w = Witness::Idempotent { element: e, rendered: ring.render_element(e), degenerate: true };
                return Ok(verdict(true, Some(w), stats));
            }
        }
    }
    stats.failures = stats.scanned;
    Ok(verdict(false, Some(Witness::Exhausted { candidates: central }), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build::build_str;
    use crate::ring::BuildOptions;

    fn ring(text: &str) -> FiniteRing {
        build_str(text, &BuildOptions::default()).unwrap()
    }

    fn boolean(r: &FiniteRing) -> Result<bool> {
        Ok(r.elements().all(|a| r.mul(a, a) == a))
    }

    fn yaqub_ring(r: &FiniteRing) -> Result<bool> {
        Ok(r.characteristic() == 3 && r.elements().all(|a| r.pow(a, 3) == a))
    }

    fn z5(r: &FiniteRing) -> Result<bool> {
        Ok(is_iso_zmod(r, 5))
    }

    #[test]
    fn zmod_detection() {
        let r = ring("Z/25");
        let j = crate::element::jacobson_radical(&r);
        let q = crate::ring::ideal::quotient(&r, &j.ideal).unwrap();
        assert!(is_iso_zmod(&q.ring, 5));
        assert!(!is_iso_zmod(&ring("Z/5 x Z/5"), 25));
        assert!(is_iso_zmod(&ring("Z/15"), 15));
        assert!(is_iso_zmod(&ring("Z/3 x Z/5"), 15));
    }

    #[test]
    fn z6_splits_as_boolean_times_yaqub() {
        let v = has_central_split(&ring("Z/6"), boolean, yaqub_ring).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(Witness::Idempotent { element: 3, rendered: "3".into(), degenerate: false }));
    }

    #[test]
    fn z5_split_is_degenerate() {
        let v = has_central_split(&ring("Z/5"), boolean, z5).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(Witness::Idempotent { element: 0, rendered: "0".into(), degenerate: true }));
    }

    #[test]
    fn z15_has_no_boolean_yaqub_split() {
        let v = has_central_split(&ring("Z/15"), boolean, yaqub_ring).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Exhausted { candidates: vec![0, 1, 6, 10] }));
    }
}
