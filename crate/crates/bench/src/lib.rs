//! Shared fixtures for the benchmarks.

use finring::{build_str, BuildOptions, FiniteRing};

/// Rings spanning the dense-table range, smallest first.
pub const FIXTURES: [&str; 5] = ["Z/60", "M2(Z/3)", "T2(Z/9)", "Z/9 x Z/25", "T3(Z/4)"];

pub fn fixture(text: &str) -> FiniteRing {
    build_str(text, &BuildOptions::default()).unwrap_or_else(|e| panic!("{text}: {e}"))
}
