//! Batch classification and verification over a corpus, with JSON and CSV output.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusEntry;
use crate::error::AlgebraError;
use crate::predicates::{evaluate, PredicateId, ScanOptions, Witness};
use crate::ring::FiniteRing;
use crate::structure::classify::{classify_by_components, FactorEvidence};
use crate::structure::theorems::{verify_all, TheoremId, VerificationRecord, VerifyOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub case_tag: String,
    pub factor_evidence: Vec<FactorEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub build_error: Option<String>,
    pub predicates: BTreeMap<PredicateId, PredicateEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification_error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub theorems: Vec<VerificationRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rings: usize,
    /// rings per classification case
    pub class_counts: BTreeMap<String, usize>,
    /// rings where each predicate holds
    pub predicate_counts: BTreeMap<PredicateId, usize>,
    pub theorem_records: usize,
    pub disagreements: usize,
    pub skipped: usize,
    pub internal_errors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub rings: Vec<RingReport>,
    pub summary: Summary,
}

impl ClassificationReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.rings.iter().flat_map(|r| r.theorems.iter()).filter(|t| t.is_disagreement())
    }

    pub fn skipped(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.rings.iter().flat_map(|r| r.theorems.iter()).filter(|t| t.is_skipped())
    }

    pub fn ring(&self, label: &str) -> Option<&RingReport> {
        self.rings.iter().find(|r| r.ring == label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub verify: VerifyOptions,
    /// evaluate the predicate table and classification
    pub classify: bool,
    pub timings: bool,
}

fn predicate_entry(ring: &FiniteRing, id: PredicateId, scan: &ScanOptions) -> (PredicateEntry, bool) {
    match evaluate(ring, id, scan) {
        Ok(v) => {
            let witness = if v.holds { None } else { v.witness };
            (PredicateEntry { holds: Some(v.holds), witness, skipped_reason: None }, false)
        }
        Err(e) => {
            let internal = !e.is_skip();
            let reason = if internal { format!("error: {e}") } else { e.to_string() };
            (PredicateEntry { holds: None, witness: None, skipped_reason: Some(reason) }, internal)
        }
    }
}

/// Report for one corpus entry; the flag is set on internal errors.
pub fn ring_report(entry: &CorpusEntry, theorems: &[TheoremId], opts: &RunOptions) -> (RingReport, bool) {
    let mut report = RingReport {
        ring: entry.label.clone(),
        order: None,
        characteristic: None,
        build_error: None,
        predicates: BTreeMap::new(),
        classification: None,
        classification_error: None,
        theorems: Vec::new(),
    };
    let ring = match &entry.ring {
        Ok(r) => r,
        Err(e) => {
            report.build_error = Some(e.to_string());
            return (report, !e.is_skip());
        }
    };
    report.order = Some(ring.order());
    report.characteristic = Some(ring.characteristic());
    let mut internal = false;
    if opts.classify {
        for id in PredicateId::ALL {
            let (p, bad) = predicate_entry(ring, id, &opts.verify.scan);
            internal |= bad;
            report.predicates.insert(id, p);
        }
        match classify_by_components(ring) {
            Ok(c) => {
                report.classification =
                    Some(ClassificationEntry { case_tag: c.case_tag.to_string(), factor_evidence: c.factor_evidence })
            }
            Err(e) => {
                internal |= !matches!(e, AlgebraError::DegenerateRing) && !e.is_skip();
                report.classification_error = Some(e.to_string());
            }
        }
    }
    report.theorems = verify_all(ring, theorems, &opts.verify);
    internal |= report.theorems.iter().any(|t| t.is_internal_error());
    (report, internal)
}

/// Classifies and verifies every entry; rings run in parallel on the current
/// rayon pool, output order follows the corpus.
pub fn run_corpus(corpus: &[CorpusEntry], theorems: &[TheoremId], opts: &RunOptions) -> ClassificationReport {
    let start = Instant::now();
    let results: Vec<(RingReport, bool)> = corpus.par_iter().map(|e| ring_report(e, theorems, opts)).collect();
    let mut summary = Summary { rings: results.len(), ..Summary::default() };
    for (r, internal) in &results {
        if let Some(c) = &r.classification {
            *summary.class_counts.entry(c.case_tag.clone()).or_default() += 1;
        }
        for (id, p) in &r.predicates {
            if p.holds == Some(true) {
                *summary.predicate_counts.entry(*id).or_default() += 1;
            }
        }
        summary.theorem_records += r.theorems.len();
        summary.disagreements += r.theorems.iter().filter(|t| t.is_disagreement()).count();
        summary.skipped += r.theorems.iter().filter(|t| t.is_skipped()).count();
        summary.internal_errors += usize::from(*internal);
    }
    summary.runtime_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
    ClassificationReport { rings: results.into_iter().map(|(r, _)| r).collect(), summary }
}

pub fn write_json<W: Write>(report: &ClassificationReport, out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, report)
}

fn cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "skip",
    }
}

/// One row per ring: order, characteristic, every predicate, case tag and
/// theorem disagreement count.
pub fn write_classification_csv<W: Write>(report: &ClassificationReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["ring".to_string(), "order".into(), "characteristic".into()];
    header.extend(PredicateId::ALL.iter().map(|p| p.as_str().to_string()));
    header.extend(["case_tag".to_string(), "disagreements".into()]);
    w.write_record(&header)?;
    for r in &report.rings {
        let mut row = vec![
            r.ring.clone(),
            r.order.map_or(String::new(), |o| o.to_string()),
            r.characteristic.map_or(String::new(), |c| c.to_string()),
        ];
        row.extend(PredicateId::ALL.iter().map(|p| cell(r.predicates.get(p).and_then(|e| e.holds)).to_string()));
        row.push(r.classification.as_ref().map_or(String::new(), |c| c.case_tag.clone()));
        row.push(r.theorems.iter().filter(|t| t.is_disagreement()).count().to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// One row per theorem record.
pub fn write_verification_csv<W: Write>(report: &ClassificationReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["ring", "theorem_id", "left", "right", "agree", "skipped_reason", "witnesses"])?;
    for t in report.rings.iter().flat_map(|r| &r.theorems) {
        w.write_record([
            t.ring.as_str(),
            t.theorem_id.as_str(),
            cell(t.left),
            cell(t.right),
            cell(t.agree),
            t.skipped_reason.as_deref().unwrap_or(""),
            &t.witnesses.join("; "),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_corpus, CorpusSpec};

    fn small(structured: &[&str], range: Option<std::ops::RangeInclusive<u64>>) -> Vec<CorpusEntry> {
        let spec = CorpusSpec {
            zmod_range: range,
            structured: structured.iter().map(|s| s.to_string()).collect(),
            derived_samples: 0,
            ..CorpusSpec::default()
        };
        build_corpus(&spec).unwrap()
    }

    fn classify_only() -> RunOptions {
        RunOptions { verify: VerifyOptions::default(), classify: true, timings: false }
    }

    #[test]
    fn zmod_rows_match_the_pattern() {
        let report = run_corpus(&small(&[], Some(2..=30)), &[], &classify_only());
        assert_eq!(report.rings.len(), 29);
        let yes: Vec<u64> = report
            .rings
            .iter()
            .filter(|r| r.predicates[&PredicateId::YaqubNilClean].holds == Some(true))
            .map(|r| r.ring[2..].parse().unwrap())
            .collect();
        assert_eq!(yes, vec![10, 12, 16, 18, 2, 20, 24, 25, 27, 3, 4, 5, 6, 8, 9]);
        let z15 = report.ring("Z/15").unwrap();
        assert!(z15.predicates[&PredicateId::YaqubNilClean].witness.is_some());
    }

    #[test]
    fn false_verdicts_carry_witnesses_and_true_ones_do_not() {
        let report = run_corpus(&small(&["M2(Z/2)", "Z/5 x Z/5"], None), &[], &classify_only());
        for r in &report.rings {
            for (id, p) in &r.predicates {
                match p.holds {
                    Some(false) => assert!(p.witness.is_some(), "{} {id}", r.ring),
                    Some(true) => assert!(p.witness.is_none()),
                    None => {}
                }
            }
        }
        let m2 = report.ring("M2(Z/2)").unwrap();
        let Some(Witness::Counterexample { rendered, .. }) = &m2.predicates[&PredicateId::Hirano].witness else {
            panic!("no hirano witness")
        };
        assert_eq!(rendered, "[[0,1],[1,1]]");
        let z55 = report.ring("Z/5 x Z/5").unwrap();
        let Some(Witness::Counterexample { rendered, .. }) = &z55.predicates[&PredicateId::Hirano].witness else {
            panic!("no hirano witness")
        };
        assert_eq!(rendered, "(1,2)");
    }

    #[test]
    fn reports_are_deterministic() {
        let corpus = small(&["T2(Z/3)", "Z/2 x Z/9"], Some(2..=12));
        let opts = RunOptions { classify: true, ..classify_only() };
        let ids = [TheoremId::ExchangeHirano, TheoremId::StructureCases];
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_json(&run_corpus(&corpus, &ids, &opts), &mut a).unwrap();
        write_json(&run_corpus(&corpus, &ids, &opts), &mut b).unwrap();
        assert_eq!(a, b);
        let mut c = Vec::new();
        write_classification_csv(&run_corpus(&corpus, &ids, &opts), &mut c).unwrap();
        let text = String::from_utf8(c).unwrap();
        assert_eq!(text.lines().count(), corpus.len() + 1);
        assert!(text.lines().next().unwrap().starts_with("ring,order,characteristic,yaqub_nil_clean"));
    }

    #[test]
    fn build_errors_are_rows() {
        let report = run_corpus(&small(&["T3(Z/9)"], None), &[TheoremId::ExchangeHirano], &classify_only());
        assert_eq!(report.rings.len(), 1);
        assert!(report.rings[0].build_error.is_some());
        assert_eq!(report.summary.internal_errors, 0);
    }
}
