//! Detection of the homomorphic images `Z/3 x Z/5` and `Z/5 x Z/5`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::element::special_elements;
use crate::error::{AlgebraError, Result};
use crate::predicates::{ScanStats, Verdict, Witness};
use crate::ring::ideal::{all_ideals, quotient};
use crate::ring::iso::is_iso_zmod;
use crate::ring::subring::corner;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ImageTarget {
    Z3xZ5,
    Z5xZ5,
}

impl ImageTarget {
    pub fn as_str(self) -> &'static str {
        match self {
            ImageTarget::Z3xZ5 => "Z3xZ5",
            ImageTarget::Z5xZ5 => "Z5xZ5",
        }
    }
}

impl fmt::Display for ImageTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ImageTarget {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z3xZ5" => Ok(ImageTarget::Z3xZ5),
            "Z5xZ5" => Ok(ImageTarget::Z5xZ5),
            _ => Err(AlgebraError::UnknownName { kind: "image target", name: s.to_string() }),
        }
    }
}

/// True iff `q` is `Z/5 x Z/5`: a nontrivial central idempotent with both
/// corners of order 5 and characteristic 5.
fn splits_as_z5_squared(q: &FiniteRing) -> Result<bool> {
    if q.order() != 25 {
        return Ok(false);
    }
    for e in special_elements(q).central_idempotents.ones() {
        if e == q.zero() || e == q.one() {
            continue;
        }
        let left = corner(q, e)?.ring;
        let right = corner(q, q.sub(q.one(), e))?.ring;
        if is_iso_zmod(&left, 5) && is_iso_zmod(&right, 5) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Searches all ideals for one whose quotient is the target. A unital ring
/// of order 15 is `Z/15`, so that target only needs the index.
pub fn hom_image_detect(ring: &FiniteRing, target: ImageTarget, ideal_guard: usize) -> Result<Verdict> {
    let ideals = all_ideals(ring, ideal_guard)?;
    let wanted = match target {
        ImageTarget::Z3xZ5 => 15,
        ImageTarget::Z5xZ5 => 25,
    };
    let mut scanned = 0;
    for ideal in &ideals {
        if ring.order() != wanted * ideal.len() {
            continue;
        }
        scanned += 1;
        let hit = match target {
            ImageTarget::Z3xZ5 => true,
            ImageTarget::Z5xZ5 => splits_as_z5_squared(&quotient(ring, ideal)?.ring)?,
        };
        if hit {
            return Ok(Verdict {
                predicate_id: format!("image_{target}"),
                holds: true,
                witness: Some(Witness::QuotientBy { ideal: ideal.elements(), index: wanted }),
                stats: ScanStats { candidates: ideals.len(), scanned, failures: 0 },
            });
        }
    }
    Ok(Verdict {
        predicate_id: format!("image_{target}"),
        holds: false,
        witness: Some(Witness::NoQuotient { ideals_checked: ideals.len() }),
        stats: ScanStats { candidates: ideals.len(), scanned, failures: scanned },
    })
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
    fn examples() {
        let v = hom_image_detect(&ring("Z/30"), ImageTarget::Z3xZ5, 64).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(Witness::QuotientBy { ideal: vec![0, 15], index: 15 }));
        assert!(!hom_image_detect(&ring("Z/50"), ImageTarget::Z5xZ5, 64).unwrap().holds);
        assert!(hom_image_detect(&ring("Z/5 x Z/5"), ImageTarget::Z5xZ5, 64).unwrap().holds);
        assert!(!hom_image_detect(&ring("Z/25"), ImageTarget::Z5xZ5, 64).unwrap().holds);
        assert!(!hom_image_detect(&ring("Z/5[x]/(x^2)"), ImageTarget::Z5xZ5, 64).unwrap().holds);
    }

    #[test]
    fn guard() {
        assert!(matches!(hom_image_detect(&ring("Z/90"), ImageTarget::Z3xZ5, 64), Err(AlgebraError::SizeGuard { .. })));
    }
}
