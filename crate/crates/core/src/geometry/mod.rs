//! Exact rational geometry: scalars, vectors, signed permutations,
//! similarities and unions of axis-aligned boxes.

mod aabox;
mod inscribed;
mod rational;
pub(crate) mod region;
mod rotation;
mod similarity;
mod vector;

pub use aabox::AxisBox;
pub use inscribed::inscribed_cube;
pub use rational::{sign, ParseRationalError, Rational};
pub use region::{region_from_signature, BoxRegion};
pub use rotation::SignedPermutation;
pub use similarity::Similarity;
pub use vector::RatVec;
