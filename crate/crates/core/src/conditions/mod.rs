//! Separation conditions: neighbor-set exploration (FNC), the WSC neighbor
//! bound, the overlap-map set `E`, the sup-norm difference set and the
//! overlap floor.

mod fnc;
mod fset;
mod gftc;
mod overlap;
mod wsc;

pub use fnc::{
    explore_fnc, explore_fnc_with, matrix_order, Edge, ExploreOptions, FncReport, FncStatus,
    TypeInfo,
};
pub use fset::{fset_characterization, FsetReport};
pub use gftc::{gftc_set, gftc_set_with, GftcSet};
pub use overlap::{overlap_floor, OverlapFloor, OverlapRow};
pub use wsc::{wsc_bound, WscBound, WscRow};
