//! Exact linear algebra and matrix modules.

pub mod field;
pub mod linalg;
pub mod module;
pub mod specht;
pub mod cell;
pub mod meataxe;
pub mod oracle;
