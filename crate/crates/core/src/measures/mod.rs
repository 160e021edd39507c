//! Self-similar measures on the cube: transition matrices, the weighted
//! quotient graph of neighbor types, and local dimensions.

mod classes;
mod dot;
mod graph;
mod localdim;
mod matrix;
mod measure;
mod pn;
mod spectral;

pub use classes::{
    class_decomposition, decompose, strongly_connected_components, ClassDecomposition,
};
pub use dot::to_dot;
pub use graph::{build_graph, build_graph_only, build_graph_unchecked, GraphEdge, QuotientGraph};
pub use localdim::{
    local_dimension, local_dimension_at, track_point, BoundaryChoice, CycleCertificate,
    DimEstimate, DimReport, TrackedPoint, DECIMAL_DIGITS,
};
pub use matrix::{mat_mul, TransitionMatrix};
pub use measure::{clause, AssumptionCheck, SelfSimilarMeasure};
pub use pn::{
    check_path, comparability_constant, enumerate_paths, generic_point, pn_along, pn_sequence,
    realize, realized_region, regions_adjacent, row_products, PathDisplay, PathSpec,
};
pub use spectral::{growth_rate, rational_log, spectral_radius, SpectralBound};
