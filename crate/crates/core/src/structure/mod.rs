//! Structure results: prime splitting, case classification, tripotent
//! witnesses and the theorem checks built on them.

pub mod classify;
pub mod decompose;
pub mod hom_image;
pub mod theorems;
pub mod tripotent;
