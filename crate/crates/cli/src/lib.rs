//! Commands behind the `finring` binary.

use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use finring::corpus::{build_corpus, CorpusSpec};
use finring::element::power_trail;
use finring::report::{
    run_corpus, write_classification_csv, write_json, write_verification_csv, ClassificationReport, RunOptions,
};
use finring::structure::tripotent::{verify_tripotent_witness, TripotentExtractor};
use finring::{
    build_str, evaluate, nilpotency, AlgebraError, BuildOptions, FiniteRing, Guards, PredicateId, ScanOptions,
    TheoremId, VerifyOptions,
};

#[derive(Debug, Parser)]
#[command(name = "finring", version, about = "Classify finite rings and check characterization theorems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every predicate and the structural case on a corpus.
    Classify(CorpusArgs),
    /// Check both sides of the theorem suite on a corpus.
    Verify {
        /// `all` or a comma-separated list such as `T5.4,C3.2`
        #[arg(long, default_value = "all")]
        theorems: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Show power trails and the tripotent witness for one element.
    Explain {
        /// ring expression, e.g. "Z/5" or "T2(Z/3)"
        ring: String,
        /// element index in the canonical enumeration
        element: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// `Z/n` for every n in the range, written `a..b` (inclusive)
    #[arg(long)]
    pub zmod: Option<String>,
    /// structured ring expression; repeatable
    #[arg(long = "ring")]
    pub rings: Vec<String>,
    /// JSON report path
    #[arg(long, default_value = "report.json")]
    pub out: PathBuf,
    /// CSV path: one row per ring for classify, per record for verify
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// scan every element instead of stopping at the first counterexample
    #[arg(long)]
    pub full_scan: bool,
    #[arg(long, default_value_t = Guards::default().max_order)]
    pub guard_order: usize,
    #[arg(long, default_value_t = Guards::default().ideal_enum_max)]
    pub guard_ideals: usize,
    #[arg(long, default_value_t = Guards::default().clean_scan_max)]
    pub guard_clean: usize,
    /// worker threads; rings are processed in parallel
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// seeded quotient, subring and corner samples of each kind; defaults to
    /// 3 for the release corpus and 0 for an explicit one
    #[arg(long)]
    pub samples: Option<usize>,
    /// record runtimes (makes reports nondeterministic)
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Process outcome of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Disagreement,
    InternalErrors,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Disagreement => 1,
            Status::InternalErrors => 3,
        }
    }
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || CliError::Usage(format!("bad range '{text}', expected a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    Ok(a..=b)
}

impl CorpusArgs {
    /// The release corpus when neither `--zmod` nor `--ring` is given.
    pub fn spec(&self, theorems: Vec<TheoremId>) -> Result<CorpusSpec, CliError> {
        let guards = Guards {
            max_order: self.guard_order,
            dense_max: Guards::default().dense_max.min(self.guard_order),
            ideal_enum_max: self.guard_ideals,
            clean_scan_max: self.guard_clean,
        };
        let mut spec = CorpusSpec { guards, theorems, seed: self.seed, ..CorpusSpec::default() };
        if self.zmod.is_some() || !self.rings.is_empty() {
            spec.zmod_range = self.zmod.as_deref().map(parse_range).transpose()?;
            spec.structured = self.rings.clone();
            spec.derived_samples = 0;
        }
        if let Some(n) = self.samples {
            spec.derived_samples = n;
        }
        spec.validate()?;
        Ok(spec)
    }

    fn run_options(&self, spec: &CorpusSpec, classify: bool) -> RunOptions {
        let scan = ScanOptions { full_scan: self.full_scan, parallel: false, guards: spec.guards };
        RunOptions {
            verify: VerifyOptions { scan, seed: spec.seed, samples: 3, timings: self.timings },
            classify,
            timings: self.timings,
        }
    }

    fn run(&self, spec: &CorpusSpec, classify: bool) -> Result<ClassificationReport, CliError> {
        if self.jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let corpus = build_corpus(spec)?;
        let opts = self.run_options(spec, classify);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(pool.install(|| run_corpus(&corpus, &spec.theorems, &opts)))
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn write_report(report: &ClassificationReport, path: &Path) -> Result<(), CliError> {
    let internal = |e: serde_json::Error| CliError::Internal(format!("{}: {e}", path.display()));
    let mut out = create(path)?;
    write_json(report, &mut out).map_err(internal)?;
    std::io::Write::write_all(&mut out, b"\n").map_err(|e| CliError::Internal(e.to_string()))
}

fn csv_error(path: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |e| CliError::Internal(format!("{}: {e}", path.display()))
}

pub fn cmd_classify(args: &CorpusArgs) -> Result<(ClassificationReport, Status), CliError> {
    let spec = args.spec(Vec::new())?;
    let report = args.run(&spec, true)?;
    write_report(&report, &args.out)?;
    if let Some(path) = &args.csv {
        write_classification_csv(&report, create(path)?).map_err(csv_error(path))?;
    }
    let status = if report.summary.internal_errors > 0 { Status::InternalErrors } else { Status::Ok };
    Ok((report, status))
}

pub fn cmd_verify(theorems: &str, args: &CorpusArgs) -> Result<(ClassificationReport, Status), CliError> {
    let spec = args.spec(TheoremId::parse_list(theorems)?)?;
    let report = args.run(&spec, false)?;
    write_report(&report, &args.out)?;
    if let Some(path) = &args.csv {
        write_verification_csv(&report, create(path)?).map_err(csv_error(path))?;
    }
    let status = if report.summary.internal_errors > 0 {
        Status::InternalErrors
    } else if report.summary.disagreements > 0 {
        Status::Disagreement
    } else {
        Status::Ok
    };
    Ok((report, status))
}

/// One-paragraph summary printed after classify and verify.
pub fn summary_text(report: &ClassificationReport) -> String {
    let s = &report.summary;
    let mut out = format!(
        "{} rings, {} theorem records, {} disagreements, {} skipped, {} internal errors\n",
        s.rings, s.theorem_records, s.disagreements, s.skipped, s.internal_errors
    );
    for (case, n) in &s.class_counts {
        let _ = writeln!(out, "  {case}: {n}");
    }
    for t in report.disagreements() {
        let _ = writeln!(out, "  disagreement {} on {}: {}", t.theorem_id, t.ring, t.witnesses.join("; "));
    }
    out
}

fn render_trail(ring: &FiniteRing, x: usize) -> String {
    let trail: Vec<String> = power_trail(ring, x).iter().take(12).map(|&p| ring.render_element(p)).collect();
    trail.join(", ")
}

fn nil_line(ring: &FiniteRing, label: &str, x: usize) -> String {
    let n = nilpotency(ring, x);
    let verdict = match n.index {
        Some(k) => format!("nilpotent, index {k}"),
        None => "not nilpotent".into(),
    };
    format!("{label} = {}: {verdict}; powers {}", ring.render_element(x), render_trail(ring, x))
}

pub fn cmd_explain(ring_text: &str, element: usize) -> Result<String, CliError> {
    let ring = build_str(ring_text, &BuildOptions::default())?;
    let a = ring.element(element)?.index();
    let cube = ring.pow(a, 3);
    let mut out = String::new();
    let _ = writeln!(out, "ring {} of order {}", ring.label(), ring.order());
    let _ = writeln!(out, "a = {} (index {a})", ring.render_element(a));
    let _ = writeln!(out, "powers of a: {}", render_trail(&ring, a));
    let _ = writeln!(out, "{}", nil_line(&ring, "a-a^3", ring.sub(a, cube)));
    let _ = writeln!(out, "{}", nil_line(&ring, "a+a^3", ring.add(a, cube)));
    let class = evaluate(&ring, PredicateId::YaqubNilClean, &ScanOptions::default())?;
    if !class.holds {
        let w = class.witness.map(|w| w.summary()).unwrap_or_default();
        let _ = writeln!(out, "{} is not Yaqub nil-clean ({w}); no witness", ring.label());
        return Ok(out);
    }
    let w = TripotentExtractor::new(&ring)?.extract(a)?;
    let mode = match w.mode {
        finring::TripotentMode::Minus => ("minus", "a-e"),
        finring::TripotentMode::Plus3 => ("plus3", "a+3e"),
    };
    let _ = writeln!(
        out,
        "witness: mode {}, e = {} (index {}), scope {:?}",
        mode.0,
        ring.render_element(w.e),
        w.e,
        w.scope
    );
    let _ = writeln!(out, "  e^3 = {}", ring.render_element(ring.pow(w.e, 3)));
    let _ = writeln!(
        out,
        "  ae = {}, ea = {}",
        ring.render_element(ring.mul(a, w.e)),
        ring.render_element(ring.mul(w.e, a))
    );
    let combo = match w.mode {
        finring::TripotentMode::Minus => ring.sub(a, w.e),
        finring::TripotentMode::Plus3 => ring.add(a, ring.scalar(3, w.e)),
    };
    let _ = writeln!(out, "  {}", nil_line(&ring, mode.1, combo));
    match verify_tripotent_witness(&ring, &w) {
        Ok(()) => {
            let _ = writeln!(out, "  verified");
        }
        Err(e) => return Err(CliError::Internal(format!("witness failed verification: {e}"))),
    }
    Ok(out)
}

/// Runs a parsed command, printing to stdout; returns the exit code.
pub fn run(cli: Cli) -> u8 {
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(&args).map(|(r, s)| {
            print!("{}", summary_text(&r));
            s
        }),
        Command::Verify { theorems, corpus } => cmd_verify(&theorems, &corpus).map(|(r, s)| {
            print!("{}", summary_text(&r));
            s
        }),
        Command::Explain { ring, element } => cmd_explain(&ring, element).map(|text| {
            print!("{text}");
            Status::Ok
        }),
    };
    match result {
        Ok(status) => status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
