use serde::Serialize;

use crate::geometry::Rational;

use super::IfsSystem;

/// Structural facts about a system. Map indices are 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub invariant: bool,
    pub non_invariant_maps: Vec<usize>,
    pub full_support: bool,
    pub equicontractive: bool,
    pub common_ratio: Option<Rational>,
    pub level_step: Rational,
    pub level_step_exact: bool,
    pub hull_is_cube: bool,
    pub boundary_maps: Vec<usize>,
    pub cover_depth: usize,
    /// Volume of `∪_{|ω|=depth} S_ω(cube)`; equals 1 under full support.
    pub cover_volume: Rational,
}

pub fn validate(sys: &IfsSystem, depth: usize) -> ValidationReport {
    let (step, exact) = sys.level_step();
    ValidationReport {
        invariant: sys.is_invariant(),
        non_invariant_maps: sys.non_invariant_maps().iter().map(|i| i + 1).collect(),
        full_support: sys.has_full_support(),
        equicontractive: sys.is_equicontractive(),
        common_ratio: sys.common_ratio().cloned(),
        level_step: step.clone(),
        level_step_exact: exact,
        hull_is_cube: sys.hull_is_cube(),
        boundary_maps: sys.boundary_maps().iter().map(|i| i + 1).collect(),
        cover_depth: depth,
        cover_volume: sys.cover_region(depth).volume(),
    }
}
