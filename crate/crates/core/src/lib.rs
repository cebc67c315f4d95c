//! Exact computation with primitive axial algebras: structure constants,
//! fusion-law and axis verification, Frobenius forms, the three radicals and
//! their containment chain, block structure, and corpus constructions, over
//! the rationals or a prime field.

pub mod algebra;
pub mod axes;
pub mod constructions;
pub mod error;
pub mod fileio;
pub mod frobenius;
pub mod fusion;
pub mod linalg;
pub mod oracle;
pub mod radicals;
pub mod report;
pub mod structure;
pub mod scalar;

pub use error::Error;
