//! Blocks and decomposition matrices of partition algebras.
//!
//! The crate has two independent routes to a decomposition matrix: the
//! closed-form recipes in [`decomposition`] and a brute-force oracle in
//! [`rep::oracle`] that builds cell modules as explicit matrices and chops them
//! into composition factors.

pub mod abacus;
pub mod blocks;
pub mod cli;
pub mod decomposition;
pub mod diagram;
pub mod error;
pub mod labeled;
pub mod laurent;
pub mod partition;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
pub use labeled::{FieldTag, LabeledMatrix};
pub use partition::{partitions_up_to, Node, Partition, PartitionSet};
