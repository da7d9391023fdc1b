//! Ring-class predicates with checkable witnesses.

pub mod recheck;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::element::{nilpotency, periodic_exponents, power_trail, special_elements, SpecialElements};
use crate::error::{AlgebraError, Result};
use crate::ring::FiniteRing;

/// Stable predicate identifiers used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PredicateId {
    YaqubNilClean,
    StronglyNilClean,
    Strongly2NilClean,
    StronglyWeaklyNilClean,
    Hirano,
    TwoUu,
    Exchange,
    Clean,
    StronglyClean,
    Periodic,
    Boolean,
    YaqubRing,
    IsoZ5,
    SquareIdentity,
    CubeIdentity,
    CubeSignedIdentity,
    FifthPowerIdentity,
    FifthPowerNil,
}

impl PredicateId {
    pub const ALL: [PredicateId; 18] = [
        PredicateId::YaqubNilClean,
        PredicateId::StronglyNilClean,
        PredicateId::Strongly2NilClean,
        PredicateId::StronglyWeaklyNilClean,
        PredicateId::Hirano,
        PredicateId::TwoUu,
        PredicateId::Exchange,
        PredicateId::Clean,
        PredicateId::StronglyClean,
        PredicateId::Periodic,
        PredicateId::Boolean,
        PredicateId::YaqubRing,
        PredicateId::IsoZ5,
        PredicateId::SquareIdentity,
        PredicateId::CubeIdentity,
        PredicateId::CubeSignedIdentity,
        PredicateId::FifthPowerIdentity,
        PredicateId::FifthPowerNil,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PredicateId::YaqubNilClean => "yaqub_nil_clean",
            PredicateId::StronglyNilClean => "strongly_nil_clean",
            PredicateId::Strongly2NilClean => "strongly_2_nil_clean",
            PredicateId::StronglyWeaklyNilClean => "strongly_weakly_nil_clean",
            PredicateId::Hirano => "hirano",
            PredicateId::TwoUu => "two_uu",
            PredicateId::Exchange => "exchange",
            PredicateId::Clean => "clean",
            PredicateId::StronglyClean => "strongly_clean",
            PredicateId::Periodic => "periodic",
            PredicateId::Boolean => "boolean",
            PredicateId::YaqubRing => "yaqub_ring",
            PredicateId::IsoZ5 => "iso_z5",
            PredicateId::SquareIdentity => "x2_eq_x",
            PredicateId::CubeIdentity => "x3_eq_x",
            PredicateId::CubeSignedIdentity => "x3_eq_pm_x",
            PredicateId::FifthPowerIdentity => "x5_eq_x",
            PredicateId::FifthPowerNil => "a_minus_a5_nil",
        }
    }

    /// Needs the quadratic exchange/clean scan and its size guard.
    pub fn is_heavy(self) -> bool {
        matches!(self, PredicateId::Exchange | PredicateId::Clean | PredicateId::StronglyClean)
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PredicateId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        PredicateId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownName { kind: "predicate", name: s.to_string() })
    }
}

impl Serialize for PredicateId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Powers of a derived value, as evidence of (non-)nilpotency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trail {
    /// the expression in `a` that was tested, e.g. `a-a^3`
    pub label: String,
    pub value: usize,
    pub rendered: String,
    pub nilpotent: bool,
    /// rendered powers `v, v^2, ..` up to the first repeat, capped
    pub powers: Vec<String>,
    pub trail_len: usize,
}

const TRAIL_CAP: usize = 12;

impl Trail {
    pub fn of(ring: &FiniteRing, label: &str, value: usize) -> Trail {
        let trail = power_trail(ring, value);
        Trail {
            label: label.to_string(),
            value,
            rendered: ring.render_element(value),
            nilpotent: trail.contains(&ring.zero()),
            powers: trail.iter().take(TRAIL_CAP).map(|&x| ring.render_element(x)).collect(),
            trail_len: trail.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionEntry {
    pub element: usize,
    pub idempotent: usize,
    /// the unit part for clean decompositions
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An element violating a universal condition.
    Counterexample { element: usize, rendered: String, trails: Vec<Trail> },
    /// Per-element data proving a universal condition.
    Decompositions { entries: Vec<DecompositionEntry> },
    /// A splitting idempotent.
    Idempotent { element: usize, rendered: String, degenerate: bool },
    /// Every candidate was tried.
    Exhausted { candidates: Vec<usize> },
    /// A global invariant with the wrong value.
    Invariant { name: String, expected: String, found: String },
    /// An ideal whose quotient has the requested shape.
    QuotientBy { ideal: Vec<usize>, index: usize },
    /// No ideal gives a quotient of the requested shape.
    NoQuotient { ideals_checked: usize },
}

impl Witness {
    /// One-line description for reports.
    pub fn summary(&self) -> String {
        match self {
            Witness::Counterexample { rendered, trails, .. } => {
                let parts: Vec<String> = trails
                    .iter()
                    .map(|t| format!("{}={}{}", t.label, t.rendered, if t.nilpotent { " (nilpotent)" } else { "" }))
                    .collect();
                if parts.is_empty() {
                    format!("a={rendered}")
                } else {
                    format!("a={rendered}: {}", parts.join(", "))
                }
            }
            Witness::Decompositions { entries } => format!("{} decompositions", entries.len()),
            Witness::Idempotent { rendered, degenerate, .. } => {
                format!("e={rendered}{}", if *degenerate { " (degenerate)" } else { "" })
            }
            Witness::Exhausted { candidates } => format!("{} candidates exhausted", candidates.len()),
            Witness::Invariant { name, expected, found } => format!("{name} is {found}, expected {expected}"),
            Witness::QuotientBy { ideal, index } => format!("ideal {ideal:?} of index {index}"),
            Witness::NoQuotient { ideals_checked } => format!("none of {ideals_checked} ideals"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScanStats {
    pub candidates: usize,
    pub scanned: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub predicate_id: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: ScanStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Guards {
    pub max_order: usize,
    pub dense_max: usize,
    pub ideal_enum_max: usize,
    pub clean_scan_max: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_order: 65_536, dense_max: 4096, ideal_enum_max: 64, clean_scan_max: 1024 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// keep scanning after the first counterexample to count all failures
    pub full_scan: bool,
    /// split element scans across threads; the smallest witness still wins
    pub parallel: bool,
    pub guards: Guards,
}

fn nondegenerate(ring: &FiniteRing) -> Result<()> {
    if ring.order() < 2 {
        Err(AlgebraError::DegenerateRing)
    } else {
        Ok(())
    }
}

/// Scans `candidates` ascending for the first element failing `ok`.
fn scan_forall<F, W>(id: PredicateId, candidates: Vec<usize>, opts: &ScanOptions, ok: F, witness: W) -> Verdict
where
    F: Fn(usize) -> bool + Sync,
    W: Fn(usize) -> Witness,
{
    let total = candidates.len();
    let (first, scanned, failures) = if opts.parallel {
        if opts.full_scan {
            let bad: Vec<usize> = candidates.par_iter().copied().filter(|&a| !ok(a)).collect();
            (bad.first().copied(), total, bad.len())
        } else {
            match candidates.par_iter().position_first(|&a| !ok(a)) {
                Some(pos) => (Some(candidates[pos]), pos + 1, 1),
                None => (None, total, 0),
            }
        }
    } else {
        let mut first = None;
        let mut scanned = 0;
        let mut failures = 0;
        for &a in &candidates {
            scanned += 1;
            if !ok(a) {
                failures += 1;
                first.get_or_insert(a);
                if !opts.full_scan {
                    break;
                }
            }
        }
        (first, scanned, failures)
    };
    Verdict {
        predicate_id: id.as_str().to_string(),
        holds: first.is_none(),
        witness: first.map(witness),
        stats: ScanStats { candidates: total, scanned, failures },
    }
}

fn counterexample(ring: &FiniteRing, a: usize, trails: &[(&str, usize)]) -> Witness {
    Witness::Counterexample {
        element: a,
        rendered: ring.render_element(a),
        trails: trails.iter().map(|&(label, v)| Trail::of(ring, label, v)).collect(),
    }
}

fn cube(ring: &FiniteRing, a: usize) -> usize {
    ring.mul(ring.mul(a, a), a)
}

fn elementwise<F>(
    ring: &FiniteRing,
    id: PredicateId,
    opts: &ScanOptions,
    ok: F,
    trails: fn(&FiniteRing, usize) -> Vec<(&'static str, usize)>,
) -> Result<Verdict>
where
    F: Fn(&SpecialElements, usize) -> bool + Sync,
{
    nondegenerate(ring)?;
    let special = special_elements(ring);
    Ok(scan_forall(
        id,
        ring.elements().collect(),
        opts,
        |a| ok(special, a),
        |a| counterexample(ring, a, &trails(ring, a)),
    ))
}

fn unitwise<F>(
    ring: &FiniteRing,
    id: PredicateId,
    opts: &ScanOptions,
    ok: F,
    trails: fn(&FiniteRing, usize) -> Vec<(&'static str, usize)>,
) -> Result<Verdict>
where
    F: Fn(&SpecialElements, usize) -> bool + Sync,
{
    nondegenerate(ring)?;
    let special = special_elements(ring);
    Ok(scan_forall(
        id,
        special.units.ones().collect(),
        opts,
        |u| ok(special, u),
        |u| counterexample(ring, u, &trails(ring, u)),
    ))
}

fn minus_cube(r: &FiniteRing, a: usize) -> usize {
    r.sub(a, cube(r, a))
}

fn plus_cube(r: &FiniteRing, a: usize) -> usize {
    r.add(a, cube(r, a))
}

/// `a + a^3` or `a - a^3` nilpotent for every `a`.
pub fn is_yaqub_nil_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    elementwise(
        ring,
        PredicateId::YaqubNilClean,
        opts,
        |s, a| s.is_nilpotent(minus_cube(ring, a)) || s.is_nilpotent(plus_cube(ring, a)),
        |r, a| vec![("a-a^3", minus_cube(r, a)), ("a+a^3", plus_cube(r, a))],
    )
}

/// `a - a^2` nilpotent for every `a`.
pub fn is_strongly_nil_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    elementwise(
        ring,
        PredicateId::StronglyNilClean,
        opts,
        |s, a| s.is_nilpotent(ring.sub(a, ring.mul(a, a))),
        |r, a| vec![("a-a^2", r.sub(a, r.mul(a, a)))],
    )
}

/// `a - a^3` nilpotent for every `a`.
pub fn is_strongly_2_nil_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    elementwise(
        ring,
        PredicateId::Strongly2NilClean,
        opts,
        |s, a| s.is_nilpotent(minus_cube(ring, a)),
        |r, a| vec![("a-a^3", minus_cube(r, a))],
    )
}

/// `a + a^2` or `a - a^2` nilpotent for every `a`.
pub fn is_strongly_weakly_nil_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    elementwise(
        ring,
        PredicateId::StronglyWeaklyNilClean,
        opts,
        |s, a| {
            let sq = ring.mul(a, a);
            s.is_nilpotent(ring.sub(a, sq)) || s.is_nilpotent(ring.add(a, sq))
        },
        |r, a| vec![("a-a^2", r.sub(a, r.mul(a, a))), ("a+a^2", r.add(a, r.mul(a, a)))],
    )
}

fn one_minus_square(r: &FiniteRing, u: usize) -> usize {
    r.sub(r.one(), r.mul(u, u))
}

fn one_plus_square(r: &FiniteRing, u: usize) -> usize {
    r.add(r.one(), r.mul(u, u))
}

/// `1 - u^2` or `1 + u^2` nilpotent for every unit `u`.
pub fn is_hirano(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    unitwise(
        ring,
        PredicateId::Hirano,
        opts,
        |s, u| s.is_nilpotent(one_minus_square(ring, u)) || s.is_nilpotent(one_plus_square(ring, u)),
        |r, u| vec![("1-u^2", one_minus_square(r, u)), ("1+u^2", one_plus_square(r, u))],
    )
}

/// `1 - u^2` nilpotent for every unit `u`.
pub fn is_2uu(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    unitwise(
        ring,
        PredicateId::TwoUu,
        opts,
        |s, u| s.is_nilpotent(one_minus_square(ring, u)),
        |r, u| vec![("1-u^2", one_minus_square(r, u))],
    )
}

fn heavy_guard(ring: &FiniteRing, opts: &ScanOptions, what: &'static str) -> Result<()> {
    nondegenerate(ring)?;
    if ring.order() > opts.guards.clean_scan_max {
        return Err(AlgebraError::SizeGuard { what, order: ring.order(), guard: opts.guards.clean_scan_max });
    }
    Ok(())
}

/// Membership in `aR`, tabulating the set only when the shortcuts fail: a
/// unit generates everything, and `1` lies in `aR` only for units since
/// one-sided inverses are two-sided here.
struct RightMultiples<'a> {
    ring: &'a FiniteRing,
    a: usize,
    unit: bool,
    set: Option<FixedBitSet>,
}

impl<'a> RightMultiples<'a> {
    fn new(ring: &'a FiniteRing, special: &SpecialElements, a: usize) -> Self {
        RightMultiples { ring, a, unit: special.is_unit(a), set: None }
    }

    fn contains(&mut self, x: usize) -> bool {
        let ring = self.ring;
        if x == ring.zero() || self.unit {
            return true;
        }
        if x == ring.one() {
            return false;
        }
        let a = self.a;
        self.set
            .get_or_insert_with(|| {
                let mut set = FixedBitSet::with_capacity(ring.order());
                for r in ring.elements() {
                    set.insert(ring.mul(a, r));
                }
                set
            })
            .contains(x)
    }
}

/// Smallest idempotent `e` with `e` in `aR` and `1 - e` in `(1 - a)R`.
pub fn exchange_idempotent(ring: &FiniteRing, a: usize) -> Option<usize> {
    let special = special_elements(ring);
    let mut a_r = RightMultiples::new(ring, special, a);
    let mut b_r = RightMultiples::new(ring, special, ring.sub(ring.one(), a));
    special.idempotents.ones().find(|&e| a_r.contains(e) && b_r.contains(ring.sub(ring.one(), e)))
}

/// Smallest idempotent `e` with `a - e` a unit (commuting with `a` when `strong`).
pub fn clean_idempotent(ring: &FiniteRing, a: usize, strong: bool) -> Option<usize> {
    let special = special_elements(ring);
    special.idempotents.ones().find(|&e| special.is_unit(ring.sub(a, e)) && (!strong || ring.commute(a, e)))
}

fn decomposition_scan<F>(ring: &FiniteRing, id: PredicateId, opts: &ScanOptions, find: F) -> Verdict
where
    F: Fn(usize) -> Option<usize> + Sync,
{
    let found: Vec<Option<usize>> = if opts.parallel {
        ring.elements().into_par_iter().map(&find).collect()
    } else {
        let mut out = Vec::with_capacity(ring.order());
        for a in ring.elements() {
            let e = find(a);
            let stop = e.is_none() && !opts.full_scan;
            out.push(e);
            if stop {
                break;
            }
        }
        out
    };
    let failures = found.iter().filter(|e| e.is_none()).count();
    let first_bad = found.iter().position(|e| e.is_none());
    let stats = ScanStats { candidates: ring.order(), scanned: found.len(), failures };
    let with_units = matches!(id, PredicateId::Clean | PredicateId::StronglyClean);
    let witness = match first_bad {
        Some(a) => counterexample(ring, a, &[]),
        None => Witness::Decompositions {
            entries: found
                .iter()
                .enumerate()
                .map(|(a, e)| {
                    let e = e.expect("no failures");
                    DecompositionEntry { element: a, idempotent: e, unit: with_units.then(|| ring.sub(a, e)) }
                })
                .collect(),
        },
    };
    Verdict { predicate_id: id.as_str().to_string(), holds: first_bad.is_none(), witness: Some(witness), stats }
}

/// Every element has an exchange idempotent. Guarded by `clean_scan_max`.
pub fn is_exchange(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    heavy_guard(ring, opts, "exchange scan")?;
    Ok(decomposition_scan(ring, PredicateId::Exchange, opts, |a| exchange_idempotent(ring, a)))
}

/// Every element is an idempotent plus a unit. Guarded by `clean_scan_max`.
pub fn is_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    heavy_guard(ring, opts, "clean scan")?;
    Ok(decomposition_scan(ring, PredicateId::Clean, opts, |a| clean_idempotent(ring, a, false)))
}

/// As [`is_clean`] with commuting parts.
pub fn is_strongly_clean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    heavy_guard(ring, opts, "clean scan")?;
    Ok(decomposition_scan(ring, PredicateId::StronglyClean, opts, |a| clean_idempotent(ring, a, true)))
}

/// Every element has a power collision; always true for finite rings.
pub fn is_periodic(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    nondegenerate(ring)?;
    Ok(scan_forall(
        PredicateId::Periodic,
        ring.elements().collect(),
        &ScanOptions { full_scan: true, ..*opts },
        |a| {
            let (m, n) = periodic_exponents(ring, a);
            m < n && ring.pow(a, m as u64) == ring.pow(a, n as u64)
        },
        |a| counterexample(ring, a, &[]),
    ))
}

/// Element-wise identities selectable by tag.
pub fn satisfies_identity(ring: &FiniteRing, tag: PredicateId, opts: &ScanOptions) -> Result<Verdict> {
    let id = tag;
    match tag {
        PredicateId::SquareIdentity => {
            elementwise(ring, id, opts, |_, a| ring.mul(a, a) == a, |r, a| vec![("a^2", r.mul(a, a))])
        }
        PredicateId::CubeIdentity => {
            elementwise(ring, id, opts, |_, a| cube(ring, a) == a, |r, a| vec![("a^3", cube(r, a))])
        }
        PredicateId::CubeSignedIdentity => elementwise(
            ring,
            id,
            opts,
            |_, a| {
                let c = cube(ring, a);
                c == a || c == ring.neg(a)
            },
            |r, a| vec![("a^3", cube(r, a)), ("-a", r.neg(a))],
        ),
        PredicateId::FifthPowerIdentity => {
            elementwise(ring, id, opts, |_, a| ring.pow(a, 5) == a, |r, a| vec![("a^5", r.pow(a, 5))])
        }
        PredicateId::FifthPowerNil => elementwise(
            ring,
            id,
            opts,
            |s, a| s.is_nilpotent(ring.sub(a, ring.pow(a, 5))),
            |r, a| vec![("a-a^5", r.sub(a, r.pow(a, 5)))],
        ),
        other => Err(AlgebraError::MalformedExpr(format!("'{other}' is not an identity tag"))),
    }
}

fn rename(mut v: Verdict, id: PredicateId) -> Verdict {
    v.predicate_id = id.as_str().to_string();
    v
}

/// The identity `x^2 = x`.
pub fn is_boolean(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    Ok(rename(satisfies_identity(ring, PredicateId::SquareIdentity, opts)?, PredicateId::Boolean))
}

fn invariant_failure(id: PredicateId, name: &str, expected: impl ToString, found: impl ToString) -> Verdict {
    Verdict {
        predicate_id: id.as_str().to_string(),
        holds: false,
        witness: Some(Witness::Invariant {
            name: name.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }),
        stats: ScanStats::default(),
    }
}

/// The identity `x^3 = x` in characteristic 3.
///
/// A finite ring with `x^3 = x` is a subdirect product of copies of `Z/2`
/// and `Z/3`; characteristic 3 excludes the `Z/2` factors.
pub fn is_yaqub_ring(ring: &FiniteRing, opts: &ScanOptions) -> Result<Verdict> {
    nondegenerate(ring)?;
    if ring.characteristic() != 3 {
        return Ok(invariant_failure(PredicateId::YaqubRing, "characteristic", 3, ring.characteristic()));
    }
    Ok(rename(satisfies_identity(ring, PredicateId::CubeIdentity, opts)?, PredicateId::YaqubRing))
}

/// Order 5 and characteristic 5.
pub fn is_iso_z5(ring: &FiniteRing, _opts: &ScanOptions) -> Result<Verdict> {
    nondegenerate(ring)?;
    if ring.order() != 5 {
        return Ok(invariant_failure(PredicateId::IsoZ5, "order", 5, ring.order()));
    }
    if ring.characteristic() != 5 {
        return Ok(invariant_failure(PredicateId::IsoZ5, "characteristic", 5, ring.characteristic()));
    }
    Ok(Verdict {
        predicate_id: PredicateId::IsoZ5.as_str().into(),
        holds: true,
        witness: None,
        stats: ScanStats { candidates: 1, scanned: 1, failures: 0 },
    })
}

/// Dispatches on a predicate id.
pub fn evaluate(ring: &FiniteRing, id: PredicateId, opts: &ScanOptions) -> Result<Verdict> {
    match id {
        PredicateId::YaqubNilClean => is_yaqub_nil_clean(ring, opts),
        PredicateId::StronglyNilClean => is_strongly_nil_clean(ring, opts),
        PredicateId::Strongly2NilClean => is_strongly_2_nil_clean(ring, opts),
        PredicateId::StronglyWeaklyNilClean => is_strongly_weakly_nil_clean(ring, opts),
        PredicateId::Hirano => is_hirano(ring, opts),
        PredicateId::TwoUu => is_2uu(ring, opts),
        PredicateId::Exchange => is_exchange(ring, opts),
        PredicateId::Clean => is_clean(ring, opts),
        PredicateId::StronglyClean => is_strongly_clean(ring, opts),
        PredicateId::Periodic => is_periodic(ring, opts),
        PredicateId::Boolean => is_boolean(ring, opts),
        PredicateId::YaqubRing => is_yaqub_ring(ring, opts),
        PredicateId::IsoZ5 => is_iso_z5(ring, opts),
        tag => satisfies_identity(ring, tag, opts),
    }
}

/// `evaluate` with default options, reduced to its boolean.
pub fn holds(ring: &FiniteRing, id: PredicateId) -> Result<bool> {
    Ok(evaluate(ring, id, &ScanOptions::default())?.holds)
}

/// Nilpotency of `k * 1`.
pub fn integer_is_nilpotent(ring: &FiniteRing, k: i64) -> bool {
    nilpotency(ring, ring.from_int(k)).is_nilpotent
}
