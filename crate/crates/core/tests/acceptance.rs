//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero when any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use finring::corpus::{build_corpus, CorpusEntry, CorpusSpec, PAIR_POOL, TRIANGULAR_BASES};
use finring::predicates::recheck::{nilpotent, recheck, violates};
use finring::predicates::{clean_idempotent, integer_is_nilpotent};
use finring::report::{run_corpus, RunOptions};
use finring::ring::ideal::{all_ideals, quotient};
use finring::structure::theorems::{sampled_corners, sampled_subrings};
use finring::structure::tripotent::{verify_tripotent_witness, QuarticSearch, TripotentExtractor};
use finring::{
    build_str, evaluate, jacobson_radical, parse_element, special_elements, verify_theorem, BuildOptions, FiniteRing,
    Guards, PredicateId, ScanOptions, TheoremId, VerifyOptions, Witness,
};

/// Wall-clock limits, single-threaded.
const ZMOD_SWEEP_LIMIT: Duration = Duration::from_secs(10);
const EQUIVALENCE_SUITE_LIMIT: Duration = Duration::from_secs(300);
/// `T3(Z/9)` has order 9^6.
const TRIANGULAR_MAX_ORDER: usize = 1 << 20;
/// Exchange scans cover the whole default corpus.
const EXCHANGE_SCAN_MAX: usize = 1 << 16;
const MIN_CLOSURE_SAMPLES: usize = 50;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ring(text: &str) -> FiniteRing {
    build_str(text, &BuildOptions::default()).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn scan() -> ScanOptions {
    ScanOptions::default()
}

fn holds(r: &FiniteRing, id: PredicateId) -> bool {
    evaluate(r, id, &scan()).unwrap_or_else(|e| panic!("{id} on {}: {e}", r.label())).holds
}

fn built(corpus: &[CorpusEntry]) -> impl Iterator<Item = &FiniteRing> {
    corpus.iter().map(|e| e.ring.as_ref().expect("default corpus builds"))
}

// Plain integer arithmetic, independent of the ring engine.

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn nil_mod(x: u64, m: u64) -> bool {
    pow_mod(x, m, m) == 0
}

/// `a - a^3` nilpotent in `Z/m` for every `a`.
fn zmod_strongly_2_nil_clean(m: u64) -> bool {
    (0..m).all(|a| nil_mod((a + m * m - pow_mod(a, 3, m)) % m, m))
}

/// `1 - u^2` nilpotent in `Z/m` for every unit `u`.
fn zmod_two_uu(m: u64) -> bool {
    (1..m).filter(|&u| num_gcd(u, m) == 1).all(|u| nil_mod((1 + m - pow_mod(u, 2, m)) % m, m))
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn zmod_order(label: &str) -> u64 {
    label.strip_prefix("Z/").and_then(|s| s.parse().ok()).expect("Z/n label")
}

fn zmod_sweep() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for n in 2..=200u64 {
        let got = holds(&ring(&format!("Z/{n}")), PredicateId::YaqubNilClean);
        let primes = prime_factors(n);
        let expected = primes.iter().all(|p| [2, 3, 5].contains(p)) && !(primes.contains(&3) && primes.contains(&5));
        if got != expected {
            mismatches.push(n);
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < ZMOD_SWEEP_LIMIT,
        format!("Z/n for n in 2..=200 matches 2^k 3^l 5^s with l*s = 0; mismatches {mismatches:?}; {elapsed:.2?}"),
    )
}

fn counterexample_element(w: &Option<Witness>) -> Option<usize> {
    match w {
        Some(Witness::Counterexample { element, .. }) => Some(*element),
        _ => None,
    }
}

fn hirano_witness(label: &str, literal: &str, oracle: bool) -> Outcome {
    let r = ring(label);
    let v = evaluate(&r, PredicateId::Hirano, &scan()).expect("hirano evaluates");
    let rechecked = recheck(&r, PredicateId::Hirano, &v);
    let given = r.resolve(&parse_element(literal).expect("literal parses")).expect("literal resolves");
    let given_ok = violates(&r, PredicateId::Hirano, given);
    let recorded = counterexample_element(&v.witness).map(|a| r.render_element(a)).unwrap_or_default();
    outcome(
        !v.holds && rechecked.is_ok() && given_ok && oracle,
        format!(
            "hirano({label}) = {}; recorded witness {recorded} rechecks {}; {literal} rejected by the checker {given_ok}",
            v.holds,
            rechecked.is_ok()
        ),
    )
}

fn z5_squared_hirano() -> Outcome {
    // u = (1, 2): u^2 = (1, 4), so 1 - u^2 = (0, 2) and 1 + u^2 = (2, 0)
    let u = [1u64, 2];
    let sq: Vec<u64> = u.iter().map(|&x| x * x % 5).collect();
    let minus: Vec<u64> = sq.iter().map(|&x| (6 - x) % 5).collect();
    let plus: Vec<u64> = sq.iter().map(|&x| (1 + x) % 5).collect();
    let nil = |v: &[u64]| v.iter().all(|&x| nil_mod(x, 5));
    hirano_witness("Z/5 x Z/5", "(1,2)", !nil(&minus) && !nil(&plus))
}

type Mat2 = [[u64; 2]; 2];

fn mat_mul(a: Mat2, b: Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
        }
    }
    c
}

fn m2z2_hirano() -> Outcome {
    let u: Mat2 = [[0, 1], [1, 1]];
    let id: Mat2 = [[1, 0], [0, 1]];
    let sq = mat_mul(u, u);
    // characteristic 2: 1 - u^2 = 1 + u^2
    let s: Mat2 = [[(1 + sq[0][0]) % 2, sq[0][1]], [sq[1][0], (1 + sq[1][1]) % 2]];
    let mut p = s;
    for _ in 0..16 {
        p = mat_mul(p, s);
    }
    let unit = (0..16).any(|k| {
        let v: Mat2 = [[k & 1, (k >> 1) & 1], [(k >> 2) & 1, (k >> 3) & 1]];
        mat_mul(u, v) == id && mat_mul(v, u) == id
    });
    hirano_witness("M2(Z/2)", "[[0,1],[1,1]]", unit && p != [[0; 2]; 2])
}

const EQUIVALENCE_THEOREMS: [TheoremId; 10] = [
    TheoremId::SquareCriterion,
    TheoremId::RadicalCubeIdentity,
    TheoremId::StructureCases,
    TheoremId::ResidueForms,
    TheoremId::TripotentWitness,
    TheoremId::SixNilpotent,
    TheoremId::TwoNilpotent,
    TheoremId::PeriodicResidueForms,
    TheoremId::ExchangeHirano,
    TheoremId::PeriodicHirano,
];

fn equivalence_suite(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let opts = RunOptions { verify: VerifyOptions::default(), classify: false, timings: false };
    let report = run_corpus(corpus, &EQUIVALENCE_THEOREMS, &opts);
    let elapsed = start.elapsed();
    let mut skips: BTreeMap<String, usize> = BTreeMap::new();
    for t in report.skipped() {
        println!("  skipped {} on {}: {}", t.theorem_id, t.ring, t.skipped_reason.as_deref().unwrap_or(""));
        *skips.entry(t.theorem_id.to_string()).or_default() += 1;
    }
    let bad: Vec<String> = report.disagreements().map(|t| format!("{} on {}", t.theorem_id, t.ring)).collect();
    let s = &report.summary;
    outcome(
        bad.is_empty() && s.internal_errors == 0 && elapsed < EQUIVALENCE_SUITE_LIMIT,
        format!(
            "{} rings, {} records, disagreements {bad:?}, skips {skips:?}, internal errors {}; {elapsed:.2?}",
            s.rings, s.theorem_records, s.internal_errors
        ),
    )
}

fn product_and_power_laws() -> Outcome {
    let opts = VerifyOptions::default();
    let mut disagreements = Vec::new();
    let mut refined_only = 0;
    let mut records = 0;
    for (i, a) in PAIR_POOL.iter().enumerate() {
        for b in &PAIR_POOL[i..] {
            let t = verify_theorem(&ring(&format!("{a} x {b}")), TheoremId::ProductRule, &opts);
            records += 1;
            if t.is_disagreement() {
                disagreements.push(t.ring.clone());
                refined_only += usize::from(t.witnesses.iter().any(|w| w.starts_with("stated converse fails")));
            }
        }
    }
    let mut skipped = Vec::new();
    for label in PAIR_POOL {
        for id in [TheoremId::PowerRule, TheoremId::HiranoPowerRule] {
            let t = verify_theorem(&ring(label), id, &opts);
            records += 1;
            if t.is_disagreement() {
                disagreements.push(format!("{id} on {label}"));
            }
            if t.is_skipped() {
                skipped.push(format!("{id} on {label}"));
            }
        }
    }
    outcome(
        disagreements.is_empty() && skipped.is_empty(),
        format!(
            "{records} records; disagreements {disagreements:?} ({refined_only} of them agree with the refined rule \
             that also asks 2 nilpotent in the other factors); skipped {skipped:?}"
        ),
    )
}

fn triangular_laws() -> Outcome {
    let guards = Guards { max_order: TRIANGULAR_MAX_ORDER, ..Guards::default() };
    let options = BuildOptions { max_order: TRIANGULAR_MAX_ORDER, ..BuildOptions::default() };
    let opts = VerifyOptions { scan: ScanOptions { guards, ..ScanOptions::default() }, ..VerifyOptions::default() };
    let mut problems = Vec::new();
    let mut checked = 0;
    for base in TRIANGULAR_BASES {
        let m = zmod_order(base);
        let (s2nc, two_uu) = (zmod_strongly_2_nil_clean(m), zmod_two_uu(m));
        for n in [2, 3] {
            let t = build_str(&format!("T{n}({base})"), &options).expect("triangular ring builds");
            for id in [TheoremId::TriangularRule, TheoremId::HiranoTriangularRule] {
                let rec = verify_theorem(&t, id, &opts);
                checked += 1;
                if rec.agree != Some(true) {
                    problems.push(format!("{id} on {}: {:?} {:?}", t.label(), rec.witnesses, rec.skipped_reason));
                }
            }
            let got = (
                evaluate(&t, PredicateId::YaqubNilClean, &opts.scan).expect("evaluates").holds,
                evaluate(&t, PredicateId::Hirano, &opts.scan).expect("evaluates").holds,
            );
            if got != (s2nc, two_uu) {
                problems.push(format!("{}: got {got:?}, integer oracle {:?}", t.label(), (s2nc, two_uu)));
            }
        }
    }
    let t2z5 = holds(&ring("T2(Z/5)"), PredicateId::YaqubNilClean);
    outcome(
        problems.is_empty() && !t2z5,
        format!("{checked} records over T2/T3 of {TRIANGULAR_BASES:?}; problems {problems:?}; yaqub(T2(Z/5)) = {t2z5}"),
    )
}

fn closure_laws(corpus: &[CorpusEntry]) -> Outcome {
    let mut samples = 0;
    let mut violations = Vec::new();
    for r in built(corpus) {
        let classes: Vec<PredicateId> =
            [PredicateId::YaqubNilClean, PredicateId::Hirano].into_iter().filter(|&id| holds(r, id)).collect();
        if classes.is_empty() {
            continue;
        }
        let mut parts = sampled_subrings(r, 0, 3).expect("subrings sample");
        parts.extend(sampled_corners(r, 0, 3).expect("corners sample"));
        for p in parts.iter().filter(|p| p.order() >= 2) {
            samples += 1;
            for &id in &classes {
                if !holds(p, id) {
                    violations.push(format!("{id} fails on {} inside {}", p.label(), r.label()));
                }
            }
        }
    }
    let guard = Guards::default().ideal_enum_max;
    let mut nil_ideals = 0;
    for r in built(corpus).filter(|r| r.order() <= guard) {
        let special = special_elements(r);
        for ideal in all_ideals(r, guard).expect("within the ideal guard") {
            if ideal.is_zero() || !ideal.members().ones().all(|x| special.is_nilpotent(x)) {
                continue;
            }
            let q = quotient(r, &ideal).expect("quotient builds").ring;
            if q.order() < 2 {
                continue;
            }
            nil_ideals += 1;
            for id in [PredicateId::YaqubNilClean, PredicateId::Hirano] {
                if holds(r, id) != holds(&q, id) {
                    violations.push(format!("{id} differs between {} and {}", r.label(), q.label()));
                }
            }
        }
    }
    outcome(
        violations.is_empty() && samples >= MIN_CLOSURE_SAMPLES && nil_ideals > 0,
        format!("{samples} subrings and corners, {nil_ideals} nonzero nil ideals; violations {violations:?}"),
    )
}

fn witness_extraction(corpus: &[CorpusEntry]) -> Outcome {
    let (mut tripotent, mut quartic, mut failures) = (0usize, 0usize, Vec::new());
    for r in built(corpus).filter(|r| holds(r, PredicateId::YaqubNilClean)) {
        let ex = TripotentExtractor::new(r).expect("ring is in the class");
        for a in r.elements() {
            match ex.extract(a) {
                Ok(w) => {
                    tripotent += 1;
                    if let Err(e) = verify_tripotent_witness(r, &w) {
                        failures.push(format!("{} a={}: {e}", r.label(), r.render_element(a)));
                    }
                }
                Err(e) => failures.push(format!("{} a={}: {e}", r.label(), r.render_element(a))),
            }
        }
        if !integer_is_nilpotent(r, 5) {
            continue;
        }
        let search = QuarticSearch::new(r);
        for a in r.elements().filter(|&a| nilpotent(r, r.add(a, r.pow(a, 3)))) {
            match search.extract(a) {
                Ok(w) => {
                    quartic += 1;
                    let e = w.e;
                    if r.pow(e, 3) != r.mul(r.from_int(4), e) || !nilpotent(r, r.sub(a, e)) {
                        failures.push(format!("{} a={}: bad quartic witness", r.label(), r.render_element(a)));
                    }
                }
                Err(e) => failures.push(format!("{} a={}: {e}", r.label(), r.render_element(a))),
            }
        }
    }
    outcome(
        failures.is_empty() && tripotent > 0 && quartic > 0,
        format!("{tripotent} tripotent and {quartic} quartic witnesses re-verified; failures {failures:?}"),
    )
}

fn exchange_chain(corpus: &[CorpusEntry]) -> Outcome {
    let guards = Guards { clean_scan_max: EXCHANGE_SCAN_MAX, ..Guards::default() };
    let opts = ScanOptions { guards, ..ScanOptions::default() };
    let (mut exchange, mut skipped, mut chained, mut problems) = (0, Vec::new(), 0, Vec::new());
    for r in built(corpus) {
        let minus_two = r.from_int(-2);
        if clean_idempotent(r, minus_two, false).is_none() {
            problems.push(format!("-2 is not clean in {}", r.label()));
        }
        match evaluate(r, PredicateId::Exchange, &opts) {
            Ok(v) if v.holds => exchange += 1,
            Ok(_) => problems.push(format!("{} is not exchange", r.label())),
            Err(e) if e.is_skip() => skipped.push(r.label().to_string()),
            Err(e) => problems.push(format!("{}: {e}", r.label())),
        }
        // finite rings are exchange, so the chain applies to every Hirano ring
        if holds(r, PredicateId::Hirano) {
            chained += 1;
            if !integer_is_nilpotent(r, 30) || !jacobson_radical(r).is_nil {
                problems.push(format!("{}: 30 or J(R) not nil", r.label()));
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "{exchange} rings exchange, {chained} Hirano rings with 30 nilpotent and nil radical; \
             exchange scan skipped above order {EXCHANGE_SCAN_MAX} for {skipped:?}; problems {problems:?}"
        ),
    )
}

fn fifth_power_images(corpus: &[CorpusEntry]) -> Outcome {
    let guard = Guards::default().ideal_enum_max;
    let opts = VerifyOptions::default();
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in built(corpus).filter(|r| r.order() <= guard) {
        let t = verify_theorem(r, TheoremId::FifthPowerImages, &opts);
        checked += 1;
        if t.agree != Some(true) {
            bad.push(format!("{}: {:?} {:?}", t.ring, t.witnesses, t.skipped_reason));
        }
    }
    // Z/30: a^5 = a for all a, but a = 2 gives a - a^3 = 24 and a + a^3 = 10
    let z30_fifth = (0..30u64).all(|a| pow_mod(a, 5, 30) == a);
    let z30_fails = (0..30u64).any(|a| {
        let c = pow_mod(a, 3, 30);
        !(a + 30 - c).is_multiple_of(30) && !(a + c).is_multiple_of(30)
    });
    let z30 = verify_theorem(&ring("Z/30"), TheoremId::FifthPowerImages, &opts);
    let discriminated = z30.agree == Some(true)
        && z30.left == Some(false)
        && z30.witnesses.iter().any(|w| w.starts_with("image Z3xZ5"))
        && z30_fifth
        && z30_fails;
    outcome(
        bad.is_empty() && discriminated,
        format!("{checked} rings of order <= {guard}; failures {bad:?}; Z/30 witnesses {:?}", z30.witnesses),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = build_corpus(&CorpusSpec::default()).expect("default corpus");
    let criteria: Vec<Criterion> = vec![
        ("Z/n sweep", Box::new(zmod_sweep)),
        ("hirano witness in Z/5 x Z/5", Box::new(z5_squared_hirano)),
        ("hirano witness in M2(Z/2)", Box::new(m2z2_hirano)),
        ("equivalence suite on the default corpus", Box::new(|| equivalence_suite(&corpus))),
        ("product and power laws", Box::new(product_and_power_laws)),
        ("triangular laws", Box::new(triangular_laws)),
        ("closure and nil quotient laws", Box::new(|| closure_laws(&corpus))),
        ("witness extraction", Box::new(|| witness_extraction(&corpus))),
        ("exchange chain", Box::new(|| exchange_chain(&corpus))),
        ("fifth powers and images", Box::new(|| fifth_power_images(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| outcome(false, format!("panicked: {:?}", p.downcast_ref::<String>())));
        let tag = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("{tag} criterion {}: {name}: {}", i + 1, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
