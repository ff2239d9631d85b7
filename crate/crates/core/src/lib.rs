//! Freeness of multiplicities on the `A3` braid arrangement.
//!
//! [`classifier::classify`] decides freeness in closed form and returns a
//! witness or an obstruction; [`oracle`] decides the same question by exact
//! linear algebra on syzygy modules and is used to cross-check the classifier.

pub mod classifier;
pub mod exactalg;
pub mod model;
pub mod obstruction;
pub mod oracle;
pub mod resolution;
pub mod survey;

pub use classifier::classify;
pub use model::{ClassificationResult, Multiplicity, Verdict};
