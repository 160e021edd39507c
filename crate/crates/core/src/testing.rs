//! Small systems shared by unit tests.

use crate::geometry::{RatVec, Rational};
use crate::ifs::IfsSystem;
use crate::measures::SelfSimilarMeasure;

pub(crate) fn ratios(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| Rational::new(a, b)).collect()
}

/// Four quadrant maps plus a central copy, all of ratio 1/2.
pub(crate) fn center_overlap() -> IfsSystem {
    let parts: Vec<_> = [(-1, 1), (-1, -1), (1, -1), (1, 1), (0, 0)]
        .iter()
        .map(|&(x, y)| (Rational::half(), RatVec::from_pairs(&[(x, 4), (y, 4)])))
        .collect();
    IfsSystem::from_scalings(2, &parts).unwrap()
}

pub(crate) fn center_measure() -> SelfSimilarMeasure {
    SelfSimilarMeasure::new(
        center_overlap(),
        ratios(&[(1, 8), (1, 8), (1, 8), (1, 8), (1, 2)]),
    )
    .unwrap()
}

/// The four quadrant maps alone.
pub(crate) fn corner_tiling() -> IfsSystem {
    let parts: Vec<_> = [(-1, 1), (-1, -1), (1, -1), (1, 1)]
        .iter()
        .map(|&(x, y)| (Rational::half(), RatVec::from_pairs(&[(x, 4), (y, 4)])))
        .collect();
    IfsSystem::from_scalings(2, &parts).unwrap()
}

/// Halves of the unit interval.
pub(crate) fn lebesgue() -> SelfSimilarMeasure {
    let sys = IfsSystem::from_scalings(
        1,
        &[
            (Rational::half(), RatVec::from_pairs(&[(-1, 4)])),
            (Rational::half(), RatVec::from_pairs(&[(1, 4)])),
        ],
    )
    .unwrap();
    SelfSimilarMeasure::uniform(sys)
}

/// Three thirds plus a central ninth.
pub(crate) fn thirds_ninths() -> IfsSystem {
    IfsSystem::from_scalings(
        1,
        &[
            (Rational::new(1, 3), RatVec::from_pairs(&[(-1, 3)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(0, 1)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(1, 3)])),
            (Rational::new(1, 9), RatVec::from_pairs(&[(0, 1)])),
        ],
    )
    .unwrap()
}
