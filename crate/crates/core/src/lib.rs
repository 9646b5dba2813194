//! Exact teaching-complexity parameters for finite concept classes.
//!
//! The crate computes the teaching dimension family (`TD`, `TD⁺`, `XTD`,
//! `XTD⁺`, `RTD`, `RTD⁺`, `RTD₁⁺`) over finite classes, and builds finite
//! truncations of the u.r.e. reduction gadgets used to classify those
//! parameters, so that each finite-scale claim about a gadget can be checked
//! mechanically.
//!
//! - [`class`]: concept classes, labelled examples, samples, disjoint unions.
//! - [`coding`]: pairing, canonical finite sets, join, sequence codes.
//! - [`hitting`]: exact minimum hitting set, the engine behind every solver.
//! - [`td`], [`xtd`], [`rtd`]: the solvers.
//! - [`lab`]: set descriptors, staged families, gadget builders and verifiers.
//! - [`oracle`]: brute-force reference implementations used for cross-checks.
//!
//! Everything here is pure and allocation-only; file formats and the command
//! line live in the `teachdim` crate.
#![no_std]

extern crate alloc;

pub mod class;
pub mod coding;
pub mod dimension;
pub mod error;
pub mod hitting;
pub mod lab;
pub mod oracle;
pub mod rtd;
pub mod set;
pub mod td;
pub mod xtd;

pub use class::{consistent, disjoint_union, Concept, ConceptClass, Domain, Label, LabeledExample, Sample};
pub use dimension::Dimension;
pub use error::{Error, Result};
pub use set::ElementSet;
