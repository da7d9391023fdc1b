//! Case classification of rings where `a + a^3` or `a - a^3` is always nilpotent.

use std::fmt;

use serde::Serialize;

use super::decompose::prime_component_decomposition;
use crate::element::jacobson_radical;
use crate::error::{AlgebraError, Result};
use crate::predicates::{evaluate, PredicateId, ScanOptions, Witness};
use crate::ring::ideal::quotient;
use crate::ring::iso::has_central_split;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    /// residue ring Boolean, nil radical
    R1,
    /// residue ring a Yaqub ring, nil radical
    R2,
    /// residue ring `Z/5`, nil radical
    R3,
    R1xR2,
    R1xR3,
    NotYaqubNilClean,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::R1 => "R1",
            CaseTag::R2 => "R2",
            CaseTag::R3 => "R3",
            CaseTag::R1xR2 => "R1xR2",
            CaseTag::R1xR3 => "R1xR3",
            CaseTag::NotYaqubNilClean => "NotYaqubNilClean",
        }
    }

    fn from_parts(boolean: bool, other: Option<CaseTag>) -> Option<CaseTag> {
        match (boolean, other) {
            (true, None) => Some(CaseTag::R1),
            (false, Some(t)) => Some(t),
            (true, Some(CaseTag::R2)) => Some(CaseTag::R1xR2),
            (true, Some(CaseTag::R3)) => Some(CaseTag::R1xR3),
            _ => None,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What was checked on one prime component (or on the residue ring).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEvidence {
    pub prime: Option<u64>,
    pub ring: String,
    pub order: usize,
    pub radical: Vec<usize>,
    pub radical_nil: bool,
    pub residue_order: usize,
    /// predicate applied to the residue ring
    pub residue_test: String,
    pub residue_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationOutcome {
    pub case_tag: CaseTag,
    pub factor_evidence: Vec<FactorEvidence>,
    /// counterexample when the ring is outside the class
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn residue_test_for(prime: u64) -> Option<PredicateId> {
    match prime {
        2 => Some(PredicateId::Boolean),
        3 => Some(PredicateId::YaqubRing),
        5 => Some(PredicateId::IsoZ5),
        _ => None,
    }
}

fn component_evidence(prime: u64, ring: &FiniteRing) -> Result<FactorEvidence> {
    let j = jacobson_radical(ring);
    let residue = quotient(ring, &j.ideal)?.ring;
    let test = residue_test_for(prime);
    let residue_holds = match test {
        Some(id) => evaluate(&residue, id, &ScanOptions::default())?.holds,
        None => false,
    };
    Ok(FactorEvidence {
        prime: Some(prime),
        ring: ring.label().to_string(),
        order: ring.order(),
        radical: j.elements(),
        radical_nil: j.is_nil,
        residue_order: residue.order(),
        residue_test: test.map_or("none", |t| t.as_str()).to_string(),
        residue_holds,
    })
}

/// Structural side of the case theorem, independent of any element-wise test:
/// split by the primes of the characteristic and check each component's
/// radical and residue ring. `None` when no case applies.
pub fn structural_case(ring: &FiniteRing) -> Result<(Option<CaseTag>, Vec<FactorEvidence>)> {
    let d = prime_component_decomposition(ring)?;
    let mut evidence = Vec::new();
    for c in &d.components {
        evidence.push(component_evidence(c.prime, &c.ring)?);
    }
    let all_ok = evidence.iter().all(|e| e.radical_nil && e.residue_holds);
    let primes = d.primes();
    let tag = if !all_ok {
        None
    } else {
        let other = match (primes.contains(&3), primes.contains(&5)) {
            (false, false) => None,
            (true, false) => Some(CaseTag::R2),
            (false, true) => Some(CaseTag::R3),
            (true, true) => return Ok((None, evidence)),
        };
        CaseTag::from_parts(primes.contains(&2), other)
    };
    Ok((tag, evidence))
}

/// Classifies by prime components; errors if the element-wise test and the
/// structural cases disagree.
pub fn classify_by_components(ring: &FiniteRing) -> Result<ClassificationOutcome> {
    let verdict = evaluate(ring, PredicateId::YaqubNilClean, &ScanOptions::default())?;
    let (tag, factor_evidence) = structural_case(ring)?;
    match (verdict.holds, tag) {
        (true, Some(case_tag)) => Ok(ClassificationOutcome { case_tag, factor_evidence, witness: None }),
        (false, None) => {
            Ok(ClassificationOutcome { case_tag: CaseTag::NotYaqubNilClean, factor_evidence, witness: verdict.witness })
        }
        (true, None) => Err(AlgebraError::ClassificationContradiction(format!(
            "{} passes the element test but matches no structural case",
            ring.label()
        ))),
        (false, Some(t)) => Err(AlgebraError::ClassificationContradiction(format!(
            "{} matches case {t} but fails the element test",
            ring.label()
        ))),
    }
}

fn holds_on(id: PredicateId) -> impl Fn(&FiniteRing) -> Result<bool> {
    move |r: &FiniteRing| Ok(evaluate(r, id, &ScanOptions::default())?.holds)
}

/// Which of the five residue forms `R/J(R)` takes, if any.
pub fn residue_form(residue: &FiniteRing) -> Result<Option<CaseTag>> {
    if residue.order() < 2 {
        return Ok(None);
    }
    for (id, tag) in
        [(PredicateId::Boolean, CaseTag::R1), (PredicateId::YaqubRing, CaseTag::R2), (PredicateId::IsoZ5, CaseTag::R3)]
    {
        if holds_on(id)(residue)? {
            return Ok(Some(tag));
        }
    }
    for (right, tag) in [(PredicateId::YaqubRing, CaseTag::R1xR2), (PredicateId::IsoZ5, CaseTag::R1xR3)] {
        let v = has_central_split(residue, holds_on(PredicateId::Boolean), holds_on(right))?;
        if v.holds && matches!(v.witness, Some(Witness::Idempotent { degenerate: false, .. })) {
            return Ok(Some(tag));
        }
    }
    Ok(None)
}

/// Classifies through the residue ring `R/J(R)`.
pub fn classify_by_residue(ring: &FiniteRing) -> Result<ClassificationOutcome> {
    let verdict = evaluate(ring, PredicateId::YaqubNilClean, &ScanOptions::default())?;
    let j = jacobson_radical(ring);
    let residue = quotient(ring, &j.ideal)?.ring;
    let form = residue_form(&residue)?;
    let evidence = vec![FactorEvidence {
        prime: None,
        ring: ring.label().to_string(),
        order: ring.order(),
        radical: j.elements(),
        radical_nil: j.is_nil,
        residue_order: residue.order(),
        residue_test: form.map_or("none".to_string(), |t| t.to_string()),
        residue_holds: form.is_some(),
    }];
    let tag = if j.is_nil { form } else { None };
    match (verdict.holds, tag) {
        (true, Some(case_tag)) => Ok(ClassificationOutcome { case_tag, factor_evidence: evidence, witness: None }),
        (false, None) => Ok(ClassificationOutcome {
            case_tag: CaseTag::NotYaqubNilClean,
            factor_evidence: evidence,
            witness: verdict.witness,
        }),
        (held, t) => Err(AlgebraError::ClassificationContradiction(format!(
            "{}: element test {held}, residue form {t:?}",
            ring.label()
        ))),
    }
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
    fn case_examples() {
        assert_eq!(classify_by_components(&ring("Z/10")).unwrap().case_tag, CaseTag::R1xR3);
        let z12 = classify_by_components(&ring("Z/12")).unwrap();
        assert_eq!(z12.case_tag, CaseTag::R1xR2);
        assert_eq!(z12.factor_evidence[0].radical, vec![0, 2]);
        let z15 = classify_by_components(&ring("Z/15")).unwrap();
        assert_eq!(z15.case_tag, CaseTag::NotYaqubNilClean);
        assert!(z15.witness.is_some());
    }

    #[test]
    fn residue_examples() {
        let z20 = classify_by_residue(&ring("Z/20")).unwrap();
        assert_eq!(z20.case_tag, CaseTag::R1xR3);
        assert_eq!(z20.factor_evidence[0].radical, vec![0, 10]);
        assert_eq!(classify_by_residue(&ring("Z/9")).unwrap().case_tag, CaseTag::R2);
        assert_eq!(classify_by_residue(&ring("Z/7")).unwrap().case_tag, CaseTag::NotYaqubNilClean);
    }

    #[test]
    fn both_classifiers_agree() {
        for n in 2..=120u64 {
            let r = ring(&format!("Z/{n}"));
            assert_eq!(
                classify_by_components(&r).unwrap().case_tag,
                classify_by_residue(&r).unwrap().case_tag,
                "Z/{n}"
            );
        }
        for text in ["T2(Z/3)", "Z/2 x Z/5", "Z/4[x]/(x^2)", "M2(Z/2)", "Z/3 x Z/3", "Z/5 x Z/5", "Z/2[x]/(x^2+x+1)"] {
            let r = ring(text);
            assert_eq!(
                classify_by_components(&r).unwrap().case_tag,
                classify_by_residue(&r).unwrap().case_tag,
                "{text}"
            );
        }
    }
}
