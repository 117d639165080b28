//! Chromatic Zagreb-type indices of flower-like graph families.

pub mod budget;
pub mod claims;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod graph;
pub mod indices;
pub mod oracle;

pub use budget::Budget;
pub use error::{Error, Result};
pub use exact::Rational;
pub use graph::{build, Family, FamilySpec, Graph};
