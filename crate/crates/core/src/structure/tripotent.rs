//! Tripotent witnesses: for each `a`, a tripotent `e` commuting with `a`
//! such that `a - e` or `a + 3e` is nilpotent.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::element::{nilpotency, special_elements, unit_inverse};
use crate::error::{AlgebraError, Result};
use crate::predicates::{evaluate, PredicateId, ScanOptions};
use crate::ring::span::AdditiveSpan;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripotentMode {
    /// `a - e` nilpotent
    Minus,
    /// `a + 3e` nilpotent
    Plus3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchScope {
    /// found among the integer polynomials in `a`
    PolynomialsInA,
    /// found only after widening to the whole ring
    WholeRing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripotentWitness {
    pub a: usize,
    pub e: usize,
    pub mode: TripotentMode,
    pub nil_index: u32,
    pub scope: SearchScope,
}

/// `Z[a]` as a bitset: the additive span of `1, a, a^2, ..`, which stops
/// growing at the first power already in the span.
pub fn polynomials_in(ring: &FiniteRing, a: usize) -> FixedBitSet {
    let mut span = AdditiveSpan::new(ring);
    let mut p = ring.one();
    while span.add_generator(p) {
        p = ring.mul(p, a);
    }
    span.into_parts().0
}

fn combination(ring: &FiniteRing, a: usize, e: usize, mode: TripotentMode) -> usize {
    match mode {
        TripotentMode::Minus => ring.sub(a, e),
        TripotentMode::Plus3 => ring.add(a, ring.scalar(3, e)),
    }
}

/// Re-verifies a witness: `e^3 = e`, `ae = ea`, and the declared combination
/// is nilpotent with exactly the recorded index.
pub fn verify_tripotent_witness(ring: &FiniteRing, w: &TripotentWitness) -> std::result::Result<(), String> {
    if ring.pow(w.e, 3) != w.e {
        return Err(format!("{} is not tripotent", ring.render_element(w.e)));
    }
    if !ring.commute(w.a, w.e) {
        return Err("witness does not commute with the element".into());
    }
    let c = combination(ring, w.a, w.e, w.mode);
    let k = w.nil_index as u64;
    if k == 0 || ring.pow(c, k) != ring.zero() || (k > 1 && ring.pow(c, k - 1) == ring.zero()) {
        return Err(format!("nilpotency index {k} does not hold for {}", ring.render_element(c)));
    }
    Ok(())
}

/// Memoized `Z[a]`, shared by `a + k` for every integer `k`.
pub struct PolynomialSpans<'a> {
    ring: &'a FiniteRing,
    spans: RefCell<HashMap<usize, Rc<FixedBitSet>>>,
}

impl<'a> PolynomialSpans<'a> {
    pub fn new(ring: &'a FiniteRing) -> Self {
        PolynomialSpans { ring, spans: RefCell::new(HashMap::new()) }
    }

    pub fn get(&self, a: usize) -> Rc<FixedBitSet> {
        let r = self.ring;
        let mut key = a;
        let mut b = r.add(a, r.one());
        while b != a {
            key = key.min(b);
            b = r.add(b, r.one());
        }
        self.spans.borrow_mut().entry(key).or_insert_with(|| Rc::new(polynomials_in(r, a))).clone()
    }
}

/// Extraction with the class membership of the ring checked once.
pub struct TripotentExtractor<'a> {
    ring: &'a FiniteRing,
    spans: PolynomialSpans<'a>,
}

impl<'a> TripotentExtractor<'a> {
    pub fn new(ring: &'a FiniteRing) -> Result<Self> {
        if !evaluate(ring, PredicateId::YaqubNilClean, &ScanOptions::default())?.holds {
            return Err(AlgebraError::PreconditionFailed(format!(
                "{}: some a has neither a-a^3 nor a+a^3 nilpotent",
                ring.label()
            )));
        }
        Ok(TripotentExtractor { ring, spans: PolynomialSpans::new(ring) })
    }

    /// Smallest witness, mode `Minus` preferred, searched in `Z[a]` first.
    pub fn extract(&self, a: usize) -> Result<TripotentWitness> {
        let ring = self.ring;
        let special = special_elements(ring);
        let valid = |e: usize, mode| special.is_nilpotent(combination(ring, a, e, mode));
        let mut by_mode: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for e in special.tripotents.ones().filter(|&e| ring.commute(a, e)) {
            for (slot, mode) in [TripotentMode::Minus, TripotentMode::Plus3].into_iter().enumerate() {
                if valid(e, mode) {
                    by_mode[slot].push(e);
                }
            }
        }
        if by_mode.iter().all(|v| v.is_empty()) {
            return Err(AlgebraError::WitnessNotFound(format!("no tripotent witness for {}", ring.render_element(a))));
        }
        let za = self.spans.get(a);
        let modes = [TripotentMode::Minus, TripotentMode::Plus3];
        let pick = |in_za: bool| {
            modes
                .iter()
                .zip(&by_mode)
                .find_map(|(&mode, list)| list.iter().find(|&&e| !in_za || za.contains(e)).map(|&e| (e, mode)))
        };
        let (e, mode, scope) = match pick(true) {
            Some((e, mode)) => (e, mode, SearchScope::PolynomialsInA),
            None => {
                let (e, mode) = pick(false).expect("nonempty");
                (e, mode, SearchScope::WholeRing)
            }
        };
        let nil_index = nilpotency(ring, combination(ring, a, e, mode)).index.expect("checked nilpotent");
        Ok(TripotentWitness { a, e, mode, nil_index, scope })
    }
}

pub fn extract_tripotent(ring: &FiniteRing, a: usize) -> Result<TripotentWitness> {
    TripotentExtractor::new(ring)?.extract(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticWitness {
    pub a: usize,
    /// `e^3 = 4e` for the quartic form, `e^3 = e` for the halved form
    pub e: usize,
    pub nil_index: u32,
}

fn five_nil_preconditions(ring: &FiniteRing, a: usize) -> Result<()> {
    if !nilpotency(ring, ring.from_int(5)).is_nilpotent {
        return Err(AlgebraError::PreconditionFailed(format!("5 is not nilpotent in {}", ring.label())));
    }
    let s = ring.add(a, ring.pow(a, 3));
    if !nilpotency(ring, s).is_nilpotent {
        return Err(AlgebraError::PreconditionFailed(format!(
            "a+a^3 is not nilpotent for a = {}",
            ring.render_element(a)
        )));
    }
    Ok(())
}

/// With 5 nilpotent and `a + a^3` nilpotent: the smallest `e` in `Z[a]` with
/// `e^3 = 4e` and `a - e` nilpotent.
pub fn extract_quartic_witness(ring: &FiniteRing, a: usize) -> Result<QuarticWitness> {
    QuarticSearch::new(ring).extract(a)
}

/// Search for `e` in `Z[a]` with `e^3 = 4e` and `a - e` nilpotent, reusing
/// the candidate list and `Z[a]` across elements.
pub struct QuarticSearch<'a> {
    ring: &'a FiniteRing,
    candidates: Vec<usize>,
    spans: PolynomialSpans<'a>,
}

impl<'a> QuarticSearch<'a> {
    pub fn new(ring: &'a FiniteRing) -> Self {
        let four = ring.from_int(4);
        let candidates = ring.elements().filter(|&e| ring.pow(e, 3) == ring.mul(four, e)).collect();
        QuarticSearch { ring, candidates, spans: PolynomialSpans::new(ring) }
    }

    /// Smallest witness, without checking any hypothesis.
    pub fn find(&self, a: usize) -> Option<QuarticWitness> {
        let ring = self.ring;
        let special = special_elements(ring);
        let mut za = None;
        for &e in &self.candidates {
            if !special.is_nilpotent(ring.sub(a, e)) {
                continue;
            }
            if za.get_or_insert_with(|| self.spans.get(a)).contains(e) {
                let nil_index = nilpotency(ring, ring.sub(a, e)).index.expect("checked nilpotent");
                return Some(QuarticWitness { a, e, nil_index });
            }
        }
        None
    }

    pub fn extract(&self, a: usize) -> Result<QuarticWitness> {
        five_nil_preconditions(self.ring, a)?;
        self.find(a).ok_or_else(|| {
            AlgebraError::WitnessNotFound(format!("no e with e^3 = 4e for {}", self.ring.render_element(a)))
        })
    }
}

/// Smallest tripotent `e` commuting with `a` such that `a + 3e` is nilpotent.
pub fn find_halved(ring: &FiniteRing, a: usize) -> Option<QuarticWitness> {
    let special = special_elements(ring);
    special.tripotents.ones().filter(|&e| ring.commute(a, e)).find_map(|e| {
        let w = ring.add(a, ring.scalar(3, e));
        nilpotency(ring, w).index.map(|nil_index| QuarticWitness { a, e, nil_index })
    })
}

/// With 5 nilpotent and `a + a^3` nilpotent: the tripotent `e = f / 2` for the
/// quartic witness `f`, so that `a + 3e` is nilpotent.
pub fn extract_halved_witness(ring: &FiniteRing, a: usize) -> Result<QuarticWitness> {
    let f = extract_quartic_witness(ring, a)?;
    let half = unit_inverse(ring, ring.from_int(2))
        .ok_or_else(|| AlgebraError::PreconditionFailed("2 is not a unit".into()))?;
    let e = ring.mul(half, f.e);
    let w = ring.add(a, ring.scalar(3, e));
    match nilpotency(ring, w).index {
        Some(nil_index) if ring.pow(e, 3) == e && ring.commute(a, e) => Ok(QuarticWitness { a, e, nil_index }),
        _ => Err(AlgebraError::WitnessNotFound(format!("halving failed for {}", ring.render_element(a)))),
    }
}

/// Converse direction for the quartic witness: with `w = a - e`,
/// `a + a^3 = 5e + (1 + 3e^2 + 3ew + w^2) w`. Returns whether that value equals
/// `a + a^3` and is nilpotent.
pub fn quartic_converse(ring: &FiniteRing, a: usize, e: usize) -> bool {
    let w = ring.sub(a, e);
    let e2 = ring.mul(e, e);
    let factor = [ring.one(), ring.scalar(3, e2), ring.scalar(3, ring.mul(e, w)), ring.mul(w, w)]
        .into_iter()
        .fold(ring.zero(), |acc, t| ring.add(acc, t));
    let rhs = ring.add(ring.scalar(5, e), ring.mul(factor, w));
    rhs == ring.add(a, ring.pow(a, 3)) && nilpotency(ring, rhs).is_nilpotent
}

/// Converse direction for the halved witness: with `w = a + 3e`,
/// `a + a^3 = -30e + w (w^2 - 9ew + 27e^2 + 1)`.
pub fn halved_converse(ring: &FiniteRing, a: usize, e: usize) -> bool {
    let w = ring.add(a, ring.scalar(3, e));
    let factor = [ring.mul(w, w), ring.scalar(-9, ring.mul(e, w)), ring.scalar(27, ring.mul(e, e)), ring.one()]
        .into_iter()
        .fold(ring.zero(), |acc, t| ring.add(acc, t));
    let rhs = ring.add(ring.scalar(-30, e), ring.mul(w, factor));
    rhs == ring.add(a, ring.pow(a, 3)) && nilpotency(ring, rhs).is_nilpotent
}
