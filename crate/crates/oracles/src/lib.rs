//! Brute-force reference implementations for cross-checking `fracnet`.
//!
//! Nothing here shares traversal code with the main crate; only the number
//! and system types are reused. Every routine favors obviousness over speed.

pub mod fixtures;
pub mod inscribed;
pub mod lambda;
pub mod membership;
pub mod pn;
pub mod scc;
