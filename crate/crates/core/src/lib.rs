//! Exact computation of net intervals, neighbor sets and transition-matrix
//! graphs for self-similar iterated function systems on the cube
//! `[-1/2, 1/2]^d`, together with the local dimensions of their
//! self-similar measures.
//!
//! All geometry is rational; floating point appears only when reporting
//! logarithms.

pub mod conditions;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod hp;
pub mod ifs;
pub mod measures;
pub mod net;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use exec::Execution;
