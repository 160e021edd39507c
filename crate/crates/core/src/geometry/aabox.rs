use std::fmt;

use serde::{Deserialize, Serialize};

use super::{RatVec, Rational};
use crate::error::{Error, Result};

/// Closed axis-aligned box `∏ [lo_j, hi_j]` with `lo_j < hi_j` on every axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AxisBox {
    lo: RatVec,
    hi: RatVec,
}

impl AxisBox {
    pub fn new(lo: RatVec, hi: RatVec) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch {
                expected: lo.dim(),
                found: hi.dim(),
            });
        }
        if lo.iter().zip(hi.iter()).any(|(a, b)| a >= b) {
            return Err(Error::DegenerateBox(format!("{lo} .. {hi}")));
        }
        Ok(AxisBox { lo, hi })
    }

    pub(crate) fn new_unchecked(lo: RatVec, hi: RatVec) -> Self {
        debug_assert!(lo.iter().zip(hi.iter()).all(|(a, b)| a < b));
        AxisBox { lo, hi }
    }

    /// `[-1/2, 1/2]^d`.
    pub fn unit_cube(dim: usize) -> Self {
        AxisBox {
            lo: RatVec::splat(dim, Rational::new(-1, 2)),
            hi: RatVec::splat(dim, Rational::half()),
        }
    }

    /// `[corner, corner + side]^d`.
    pub fn cube(corner: &RatVec, side: &Rational) -> Self {
        let hi = RatVec(corner.iter().map(|c| c + side).collect());
        AxisBox::new_unchecked(corner.clone(), hi)
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn lo(&self) -> &RatVec {
        &self.lo
    }

    pub fn hi(&self) -> &RatVec {
        &self.hi
    }

    pub fn side(&self, axis: usize) -> Rational {
        &self.hi[axis] - &self.lo[axis]
    }

    pub fn min_side(&self) -> Rational {
        (0..self.dim())
            .map(|j| self.side(j))
            .min()
            .expect("boxes have at least one axis")
    }

    pub fn volume(&self) -> Rational {
        (0..self.dim()).map(|j| self.side(j)).product()
    }

    pub fn center(&self) -> RatVec {
        let half = Rational::half();
        RatVec(
            self.lo
                .iter()
                .zip(self.hi.iter())
                .map(|(a, b)| (a + b) * &half)
                .collect(),
        )
    }

    pub fn contains_point(&self, p: &RatVec) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(self.hi.iter()))
            .all(|(x, (a, b))| a <= x && x <= b)
    }

    pub fn interior_contains_point(&self, p: &RatVec) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(self.hi.iter()))
            .all(|(x, (a, b))| a < x && x < b)
    }

    pub fn contains_box(&self, other: &AxisBox) -> bool {
        (0..self.dim()).all(|j| self.lo[j] <= other.lo[j] && other.hi[j] <= self.hi[j])
    }

    /// Intersection with nonempty interior, if any.
    pub fn open_intersection(&self, other: &AxisBox) -> Option<AxisBox> {
        let mut lo = Vec::with_capacity(self.dim());
        let mut hi = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let a = Rational::max_of(&self.lo[j], &other.lo[j]);
            let b = Rational::min_of(&self.hi[j], &other.hi[j]);
            if a >= b {
                return None;
            }
            lo.push(a);
            hi.push(b);
        }
        Some(AxisBox::new_unchecked(RatVec(lo), RatVec(hi)))
    }

    /// Whether the open interiors overlap.
    pub fn interiors_meet(&self, other: &AxisBox) -> bool {
        (0..self.dim()).all(|j| self.lo[j] < other.hi[j] && other.lo[j] < self.hi[j])
    }

    /// Whether the closed boxes meet at all (possibly only on the boundary).
    pub fn closed_meet(&self, other: &AxisBox) -> bool {
        (0..self.dim()).all(|j| self.lo[j] <= other.hi[j] && other.lo[j] <= self.hi[j])
    }

    /// Whether the closed boxes share a (d-1)-dimensional face patch.
    pub fn shares_face(&self, other: &AxisBox) -> bool {
        let mut touching = 0;
        for j in 0..self.dim() {
            if self.hi[j] == other.lo[j] || other.hi[j] == self.lo[j] {
                touching += 1;
            } else if !(self.lo[j] < other.hi[j] && other.lo[j] < self.hi[j]) {
                return false;
            }
        }
        touching == 1
    }

    /// Whether the box meets the boundary of `[-1/2,1/2]^d`.
    pub fn touches_unit_boundary(&self) -> bool {
        let half = Rational::half();
        let neg_half = -&half;
        self.lo.iter().any(|x| x <= &neg_half) || self.hi.iter().any(|x| x >= &half)
    }
}

impl fmt::Display for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.dim() {
            if j > 0 {
                write!(f, "×")?;
            }
            write!(f, "[{}, {}]", self.lo[j], self.hi[j])?;
        }
        Ok(())
    }
}

impl fmt::Debug for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
