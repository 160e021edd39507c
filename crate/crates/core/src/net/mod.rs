//! Net intervals, their normalizations and neighbor sets.

mod enumerate;
mod interval;
mod subdivide;

pub use enumerate::{
    children, children_with, net_intervals_at, net_intervals_at_with, Containment, NetIntervals,
};
pub use interval::{neighbor_set, normalization, CoverMap, NeighborSet, NetInterval, TypeKey};
pub(crate) use subdivide::subdivide;
