//! Ring corpora: `Z/n` ranges, structured expressions and seeded samples.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::special_elements;
use crate::error::{AlgebraError, Result};
use crate::predicates::Guards;
use crate::ring::build::build;
use crate::ring::parse::parse_ring_expr;
use crate::ring::{BuildOptions, FiniteRing, RingExpr};
use crate::structure::theorems::TheoremId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub zmod_range: Option<RangeInclusive<u64>>,
    pub structured: Vec<String>,
    pub guards: Guards,
    pub theorems: Vec<TheoremId>,
    pub seed: u64,
    /// number of seeded quotient, subring and corner samples of each kind
    pub derived_samples: usize,
}

impl Default for CorpusSpec {
    /// The release corpus.
    fn default() -> Self {
        CorpusSpec {
            zmod_range: Some(2..=200),
            structured: default_structured(),
            guards: Guards::default(),
            theorems: TheoremId::ALL.to_vec(),
            seed: 0,
            derived_samples: 3,
        }
    }
}

/// Bases for the triangular rings and the pair products.
pub const TRIANGULAR_BASES: [&str; 5] = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/9"];
pub const PAIR_POOL: [&str; 6] = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/9", "Z/25"];
/// Small rings whose squares and cubes stay within the default order limit.
pub const LAW_POOL: [&str; 10] = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/9", "Z/25", "T2(Z/2)", "Z/5[x]/(x^2)"];

pub fn default_structured() -> Vec<String> {
    let mut out = Vec::new();
    for b in TRIANGULAR_BASES {
        out.push(format!("T2({b})"));
        // T3(Z/9) has order 9^6, above the default limit
        if b != "Z/9" {
            out.push(format!("T3({b})"));
        }
    }
    out.extend(["M2(Z/2)".to_string(), "M2(Z/3)".to_string()]);
    for (i, a) in PAIR_POOL.iter().enumerate() {
        for b in &PAIR_POOL[i..] {
            out.push(format!("{a} x {b}"));
        }
    }
    out.extend(["Z/2[x]/(x^2)", "Z/4[x]/(x^2)", "Z/5[x]/(x^2)", "Z/25[x]/(x^3)"].map(String::from));
    out
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if let Some(r) = &self.zmod_range {
            if r.is_empty() || *r.start() < 2 {
                return Err(AlgebraError::InvalidCorpus(format!(
                    "Z/n range {}..{} must be nonempty and start at 2 or more",
                    r.start(),
                    r.end()
                )));
            }
        }
        let g = &self.guards;
        if g.max_order == 0 || g.ideal_enum_max == 0 || g.clean_scan_max == 0 {
            return Err(AlgebraError::InvalidCorpus("guards must be positive".into()));
        }
        for s in &self.structured {
            parse_ring_expr(s)?;
        }
        Ok(())
    }

    pub fn build_options(&self) -> BuildOptions {
        BuildOptions { max_order: self.guards.max_order, dense_max: self.guards.dense_max }
    }
}

/// A corpus member; rings that fail to build are kept with the error.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub ring: std::result::Result<FiniteRing, AlgebraError>,
}

/// Builds every ring of `spec`, sorted by rendered expression with
/// duplicates removed. Seeded samples are derived from the structured rings.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    let options = spec.build_options();
    let mut exprs: Vec<RingExpr> = Vec::new();
    if let Some(r) = &spec.zmod_range {
        exprs.extend(r.clone().map(RingExpr::ZMod));
    }
    for s in &spec.structured {
        exprs.push(parse_ring_expr(s)?);
    }
    let mut entries: BTreeMap<String, CorpusEntry> = BTreeMap::new();
    for e in exprs {
        let label = e.to_string();
        entries.entry(label.clone()).or_insert_with(|| CorpusEntry { label, ring: build(&e, &options) });
    }
    let bases: Vec<FiniteRing> = spec
        .structured
        .iter()
        .filter_map(|s| entries.get(&parse_ring_expr(s).ok()?.to_string()))
        .filter_map(|e| e.ring.as_ref().ok().cloned())
        .collect();
    for expr in derived_samples(&bases, spec.seed, spec.derived_samples) {
        let label = expr.to_string();
        entries.entry(label.clone()).or_insert_with(|| CorpusEntry { label, ring: build(&expr, &options) });
    }
    Ok(entries.into_values().collect())
}

/// Seeded quotients by principal ideals, `Z[a]` subrings and corners of the
/// given rings, as expressions.
pub fn derived_samples(bases: &[FiniteRing], seed: u64, count: usize) -> Vec<RingExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let boxed = |r: &FiniteRing| Box::new(r.expr().clone());
    if bases.is_empty() {
        return out;
    }
    for _ in 0..count {
        let r = bases.choose(&mut rng).expect("nonempty");
        // a unit would give the zero ring
        let special = special_elements(r);
        let non_units: Vec<usize> = r.elements().filter(|&x| x != r.zero() && !special.is_unit(x)).collect();
        let g = non_units.choose(&mut rng).copied().unwrap_or(r.zero());
        out.push(RingExpr::Quotient(boxed(r), vec![r.element_literal(g)]));
    }
    for _ in 0..count {
        let r = bases.choose(&mut rng).expect("nonempty");
        let a = rng.gen_range(0..r.order());
        out.push(RingExpr::Subring(boxed(r), vec![r.element_literal(a)]));
    }
    let with_idempotents: Vec<(&FiniteRing, Vec<usize>)> = bases
        .iter()
        .map(|r| {
            let ids = special_elements(r).idempotents.ones().filter(|&e| e != r.zero() && e != r.one()).collect();
            (r, ids)
        })
        .filter(|(_, ids): &(_, Vec<usize>)| !ids.is_empty())
        .collect();
    for _ in 0..count {
        if let Some((r, ids)) = with_idempotents.choose(&mut rng) {
            let e = *ids.choose(&mut rng).expect("nonempty");
            out.push(RingExpr::Corner(boxed(r), r.element_literal(e)));
        }
    }
    out
}

/// Builds one ring per label of a fixed pool, panicking on malformed input.
pub fn pool(labels: &[&str]) -> Vec<FiniteRing> {
    labels
        .iter()
        .map(|s| crate::ring::build::build_str(s, &BuildOptions::default()).expect("pool ring builds"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_size() {
        let c = build_corpus(&CorpusSpec::default()).unwrap();
        assert!((150..=250).contains(&c.len()), "{}", c.len());
        assert!(c.iter().all(|e| e.ring.as_ref().is_ok_and(|r| r.order() >= 2)));
        let labels: Vec<&str> = c.iter().map(|e| e.label.as_str()).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(labels, sorted);
        assert!(labels.contains(&"Z/3 x Z/5"));
        assert!(labels.iter().any(|l| l.starts_with("corner(")));
        assert!(labels.iter().any(|l| l.starts_with("sub(")));
        assert!(labels.iter().any(|l| l.contains(" / (")));
    }

    #[test]
    fn samples_depend_only_on_the_seed() {
        let bases = pool(&["Z/12", "M2(Z/2)", "T2(Z/3)"]);
        assert_eq!(derived_samples(&bases, 5, 3), derived_samples(&bases, 5, 3));
        assert_ne!(derived_samples(&bases, 5, 3), derived_samples(&bases, 6, 3));
        for e in derived_samples(&bases, 5, 3) {
            assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn validation() {
        let bad_range = CorpusSpec { zmod_range: Some(1..=5), ..CorpusSpec::default() };
        assert!(bad_range.validate().is_err());
        let bad_expr = CorpusSpec { structured: vec!["Q/3".into()], ..CorpusSpec::default() };
        assert!(bad_expr.validate().is_err());
        let oversize = CorpusSpec { zmod_range: None, structured: vec!["T3(Z/9)".into()], ..CorpusSpec::default() };
        let c = build_corpus(&oversize).unwrap();
        assert!(matches!(c[0].ring, Err(AlgebraError::OrderOverflow { .. })));
    }
}
