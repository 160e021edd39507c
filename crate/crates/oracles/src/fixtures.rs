//! Desk-scale systems and hand-listed reference data for them.

use fracnet::geometry::{RatVec, Rational, SignedPermutation, Similarity};
use fracnet::ifs::IfsSystem;

pub fn rationals(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| Rational::new(a, b)).collect()
}

fn quadrants(with_center: bool) -> IfsSystem {
    let mut offsets = vec![(-1, 1), (-1, -1), (1, -1), (1, 1)];
    if with_center {
        offsets.push((0, 0));
    }
    let parts: Vec<_> = offsets
        .iter()
        .map(|&(x, y)| (Rational::half(), RatVec::from_pairs(&[(x, 4), (y, 4)])))
        .collect();
    IfsSystem::from_scalings(2, &parts).expect("valid system")
}

/// Four quadrant maps of ratio 1/2 plus the central map `x/2`.
pub fn center_overlap() -> IfsSystem {
    quadrants(true)
}

/// `p = (1/8, 1/8, 1/8, 1/8, 1/2)`.
pub fn center_overlap_probs() -> Vec<Rational> {
    rationals(&[(1, 8), (1, 8), (1, 8), (1, 8), (1, 2)])
}

/// Distinct weights on every map. Breaks the boundary-weight assumption but
/// exercises every matrix entry separately.
pub fn center_overlap_asymmetric_probs() -> Vec<Rational> {
    rationals(&[(1, 16), (1, 8), (3, 16), (1, 4), (3, 8)])
}

pub fn center_overlap_measure() -> (IfsSystem, Vec<Rational>) {
    (center_overlap(), center_overlap_probs())
}

/// The four quadrant maps alone: a tiling with the open set condition.
pub fn corner_tiling() -> IfsSystem {
    quadrants(false)
}

/// Same tiling with each map reflected or rotated, still a tiling.
pub fn rotated_tiling() -> IfsSystem {
    let rots = [
        SignedPermutation::new(vec![1, 0], vec![1, -1]).unwrap(),
        SignedPermutation::identity(2),
        SignedPermutation::new(vec![0, 1], vec![-1, 1]).unwrap(),
        SignedPermutation::new(vec![1, 0], vec![-1, -1]).unwrap(),
    ];
    let maps = [(-1, 1), (-1, -1), (1, -1), (1, 1)]
        .iter()
        .zip(rots)
        .map(|(&(x, y), rot)| {
            Similarity::new(Rational::half(), rot, RatVec::from_pairs(&[(x, 4), (y, 4)])).unwrap()
        })
        .collect();
    IfsSystem::new(maps).expect("valid system")
}

/// `x/3 - 1/3`, `x/3`, `x/3 + 1/3`, `x/9` on `[-1/2, 1/2]`.
pub fn thirds_ninths() -> IfsSystem {
    IfsSystem::from_scalings(
        1,
        &[
            (Rational::new(1, 3), RatVec::from_pairs(&[(-1, 3)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(0, 1)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(1, 3)])),
            (Rational::new(1, 9), RatVec::from_pairs(&[(0, 1)])),
        ],
    )
    .expect("valid system")
}

/// `x/2 - 1/4`, `x/2 + 1/4` with equal weights: Lebesgue measure.
pub fn lebesgue() -> (IfsSystem, Vec<Rational>) {
    let sys = IfsSystem::from_scalings(
        1,
        &[
            (Rational::half(), RatVec::from_pairs(&[(-1, 4)])),
            (Rational::half(), RatVec::from_pairs(&[(1, 4)])),
        ],
    )
    .expect("valid system");
    (sys, rationals(&[(1, 2), (1, 2)]))
}

/// Three equal thirds overlapped by a shifted third, ratio 1/3.
pub fn shifted_thirds() -> IfsSystem {
    IfsSystem::from_scalings(
        1,
        &[
            (Rational::new(1, 3), RatVec::from_pairs(&[(-1, 3)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(0, 1)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(1, 3)])),
            (Rational::new(1, 3), RatVec::from_pairs(&[(1, 6)])),
        ],
    )
    .expect("valid system")
}

/// Interval `[lo, hi]` with endpoints as `(numer, denom)`.
pub type Piece = ((i64, i64), (i64, i64));

/// Reference net intervals of `thirds_ninths` at `α = 1/2`, as `(lo, hi)`
/// pieces per interval.
pub const THIRDS_NINTHS_REFERENCE: [&[Piece]; 4] = [
    &[((-1, 2), (-1, 6))],
    &[((-1, 6), (-1, 18)), ((1, 18), (1, 6))],
    &[((-1, 6), (1, 6))],
    &[((1, 6), (1, 2))],
];

/// Reference edge list of the center-overlap quotient graph with symbolic
/// matrices, rows `;`-separated and letters 1-based.
pub const CENTER_OVERLAP_REFERENCE: &[(&str, &str, &str)] = &[
    ("A", "1", "[p1]"),
    ("A", "2", "[p2]"),
    ("A", "3", "[p3]"),
    ("A", "4", "[p4]"),
    ("A", "5", "[p5 p3]"),
    ("A", "5", "[p1 p5]"),
    ("A", "6", "[p2 p5]"),
    ("A", "6", "[p5 p4]"),
    ("1", "1", "[p1]"),
    ("1", "2", "[p2]"),
    ("1", "4", "[p4]"),
    ("1", "5", "[p1 p5]"),
    ("1", "6", "[p2 p5]"),
    ("1", "6", "[p5 p4]"),
    ("2", "1", "[p1]"),
    ("2", "2", "[p2]"),
    ("2", "3", "[p3]"),
    ("2", "5", "[p5 p3]"),
    ("2", "5", "[p1 p5]"),
    ("2", "6", "[p2 p5]"),
    ("3", "2", "[p2]"),
    ("3", "3", "[p3]"),
    ("3", "4", "[p4]"),
    ("3", "5", "[p5 p3]"),
    ("3", "6", "[p2 p5]"),
    ("3", "6", "[p5 p4]"),
    ("4", "1", "[p1]"),
    ("4", "3", "[p3]"),
    ("4", "4", "[p4]"),
    ("4", "5", "[p5 p3]"),
    ("4", "5", "[p1 p5]"),
    ("4", "6", "[p5 p4]"),
    ("5", "5", "[p5 p3; p1 0]"),
    ("5", "5", "[0 p5; p1 p5]"),
    ("5", "7", "[p3; p1]"),
    ("6", "6", "[p5 p4; p1 0]"),
    ("6", "6", "[0 p4; p1 p5]"),
    ("6", "8", "[p4 p2]"),
    ("7", "2", "[p2]"),
    ("7", "4", "[p4]"),
    ("7", "6", "[p2 p5]"),
    ("7", "6", "[p5 p4]"),
    ("8", "1", "[p1]"),
    ("8", "3", "[p3]"),
    ("8", "5", "[p5 p3]"),
    ("8", "5", "[p1 p5]"),
];
