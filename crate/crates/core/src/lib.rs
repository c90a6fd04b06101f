//! Exact engine for tensor-square containment checks on symmetric, classical
//! Weyl and non-crystallographic Coxeter groups.

pub mod cache;
pub mod classical;
pub mod cli;
pub mod error;
pub mod exact;
pub mod hyperoctahedral;
pub mod orbit;
pub mod partition;
pub mod report;
pub mod symbols;
pub mod symmetric;

pub use error::{Error, Result};
pub use partition::{BiPartition, Dominance, Partition};
