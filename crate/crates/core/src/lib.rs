//! Exact algebra for conditional-independence ideals with a hidden variable.
pub mod budget;
pub mod cli;
pub mod dimdeg;
pub mod error;
pub mod grid;
pub mod groebner;
pub mod hypergraph;
pub mod ideals;
pub mod linalg;
pub mod par;
pub mod parametrize;
pub mod poly;
pub mod report;
pub use error::{Error, Result};
