//! Exact counting of pertinent binary matrices.
//!
//! A random sparse matrix `S` (every variable entry nonzero with probability
//! `r`) leaves the determinant of its parent matrix least disturbed when
//! `per(support(S))` equals a family-dependent target. This crate counts the
//! binary supports hitting that target, by number of one-valued variable
//! entries, along three independent routes:
//!
//! * exhaustive enumeration with fast pertinence predicates ([`enumeration`]),
//! * a census of labeled acyclic digraphs ([`dag`]),
//! * a division-free generating-function recurrence ([`genfunc`]),
//!
//! and assembles the resulting probability polynomials ([`probability`]).
//! [`discrete`] covers value sets with finitely many values, where the
//! binary reduction no longer holds in general.

pub mod dag;
pub mod discrete;
pub mod enumeration;
mod error;
pub mod exec;
pub mod genfunc;
pub mod matrix;
pub mod poly;
pub mod probability;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Parallelism;
pub use matrix::{BinaryMatrix, Family, RationalMatrix, TypeSpec};
