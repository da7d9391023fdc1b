//! Finite ring engine: construction, element analysis, class predicates and
//! structure theorems for rings where `a + a^3` or `a - a^3` is nilpotent.

pub mod corpus;
pub mod element;
pub mod error;
pub mod predicates;
pub mod report;
pub mod ring;
pub mod structure;

pub use element::{
    jacobson_radical, nilpotency, special_elements, unit_inverse, NilpotencyResult, RadicalResult, SpecialElements,
};
pub use error::{AlgebraError, Result};
pub use predicates::{evaluate, Guards, PredicateId, ScanOptions, Verdict, Witness};
pub use ring::build::{build, build_str};
pub use ring::parse::{parse_element, parse_ring_expr};
pub use ring::{BuildOptions, ElemLit, Element, FiniteRing, RingExpr};
pub use structure::classify::{classify_by_components, classify_by_residue, CaseTag, ClassificationOutcome};
pub use structure::decompose::{prime_component_decomposition, Decomposition};
pub use structure::hom_image::{hom_image_detect, ImageTarget};
pub use structure::theorems::{verify_all, verify_theorem, TheoremId, VerificationRecord, VerifyOptions};
pub use structure::tripotent::{
    extract_halved_witness, extract_quartic_witness, extract_tripotent, TripotentMode, TripotentWitness,
};
