//! Prym representations of handlebody and twist groups over `Z[ζ_d]`.
//!
//! The crate works with `2(g-1)`-square matrices over the cyclotomic integers
//! acting on `R^(2g-2)` with its skew-Hermitian intersection form. It builds
//! generator matrices, decides membership in the relevant subgroups,
//! decomposes members into generator words, and computes the lower-right
//! block independently from the action of free-group automorphisms on the
//! homology of a cyclic graph cover.

pub mod cyclotomic;
pub mod decompose;
pub mod error;
pub mod foxcover;
pub mod generators;
mod hnf;
pub mod matrix;
pub mod predicates;
pub mod sampling;
pub mod selftest;
pub mod word;

pub use cyclotomic::{CycInt, RingLiteral};
pub use error::{Error, ParseError, Result};
pub use matrix::{BlockMat, RingMatrix};
pub use word::Word;
