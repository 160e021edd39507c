use fracnet::geometry::{AxisBox, RatVec};

/// `x ∈ ⋂ closed_in` and `x ∉ ⋃ interior(open_out)`, evaluated coordinate by
/// coordinate.
pub fn region_membership(
    closed_in: &[AxisBox],
    open_out: &[AxisBox],
    probes: &[RatVec],
) -> Vec<bool> {
    probes
        .iter()
        .map(|x| {
            let inside = closed_in
                .iter()
                .all(|b| (0..x.dim()).all(|j| b.lo()[j] <= x[j] && x[j] <= b.hi()[j]));
            let excluded = open_out
                .iter()
                .any(|b| (0..x.dim()).all(|j| b.lo()[j] < x[j] && x[j] < b.hi()[j]));
            inside && !excluded
        })
        .collect()
}
