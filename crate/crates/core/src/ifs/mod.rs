//! Iterated function systems: words, generations and structural checks.

mod lambda;
mod system;
mod validate;
mod word;

pub use lambda::{generation, generation_with, lambda_alpha, lambda_alpha_with};
pub use system::IfsSystem;
pub use validate::{validate, ValidationReport};
pub use word::Word;
