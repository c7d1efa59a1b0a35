//! Exact arithmetic in towers of real quadratic extensions of ℚ, and
//! constructibility verdicts for rational cubics.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod parser;
pub mod poly;
pub mod tower;

pub use error::{Error, Result};
pub use exactnum::BigRational;
pub use tower::{Approx, BasisDescriptor, Tower, TowerElement, ValidationReport};
