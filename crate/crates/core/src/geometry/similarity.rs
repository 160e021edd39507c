use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AxisBox, RatVec, Rational, SignedPermutation};
use crate::error::{Error, Result};

/// Affine similarity `x ↦ ratio · rot(x) + trans` with exact coefficients.
///
/// Field order gives the derived ordering `(ratio, rot, trans)`, which is the
/// canonical order used for neighbor sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Similarity {
    ratio: Rational,
    rot: SignedPermutation,
    trans: RatVec,
}

impl Similarity {
    pub fn new(ratio: Rational, rot: SignedPermutation, trans: RatVec) -> Result<Self> {
        if !ratio.is_positive() {
            return Err(Error::InvalidRatio(format!(
                "ratio {ratio} must be positive"
            )));
        }
        if rot.dim() != trans.dim() {
            return Err(Error::DimensionMismatch {
                expected: rot.dim(),
                found: trans.dim(),
            });
        }
        Ok(Similarity { ratio, rot, trans })
    }

    /// `x ↦ ratio · x + trans`.
    pub fn scaling(ratio: Rational, trans: RatVec) -> Self {
        let rot = SignedPermutation::identity(trans.dim());
        Similarity { ratio, rot, trans }
    }

    pub fn identity(dim: usize) -> Self {
        Similarity::scaling(Rational::one(), RatVec::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.trans.dim()
    }

    pub fn ratio(&self) -> &Rational {
        &self.ratio
    }

    pub fn rot(&self) -> &SignedPermutation {
        &self.rot
    }

    pub fn trans(&self) -> &RatVec {
        &self.trans
    }

    pub fn is_identity(&self) -> bool {
        self.ratio.is_one() && self.rot.is_identity() && self.trans.is_zero()
    }

    pub fn apply(&self, x: &RatVec) -> RatVec {
        let mut y = self.rot.apply(x).scale(&self.ratio);
        for (yi, ti) in y.0.iter_mut().zip(self.trans.iter()) {
            *yi += ti;
        }
        y
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Similarity) -> Result<Similarity> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Similarity) -> Similarity {
        Similarity {
            ratio: &self.ratio * &other.ratio,
            rot: self.rot.compose(&other.rot),
            trans: self.apply(&other.trans),
        }
    }

    pub fn invert(&self) -> Similarity {
        let inv_ratio = self.ratio.recip();
        let inv_rot = self.rot.inverse();
        let trans = inv_rot.apply(&self.trans).scale(&inv_ratio).neg();
        Similarity {
            ratio: inv_ratio,
            rot: inv_rot,
            trans,
        }
    }

    /// Exact image of an axis-aligned box.
    pub fn image_box(&self, b: &AxisBox) -> AxisBox {
        let d = self.dim();
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for i in 0..d {
            let (src, positive) = self.rot.source_axis(i);
            let (a, c) = if positive {
                (&b.lo()[src], &b.hi()[src])
            } else {
                (&b.hi()[src], &b.lo()[src])
            };
            let sign = if positive {
                Rational::one()
            } else {
                Rational::integer(-1)
            };
            let t = &self.trans[i];
            lo.push(&(&self.ratio * &sign) * a + t);
            hi.push(&(&self.ratio * &sign) * c + t);
        }
        AxisBox::new_unchecked(RatVec(lo), RatVec(hi))
    }

    /// Image of the reference cube `[-1/2,1/2]^d`.
    pub fn image_of_cube(&self) -> AxisBox {
        self.image_box(&AxisBox::unit_cube(self.dim()))
    }
}

impl fmt::Display for Similarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rot.is_identity() {
            write!(f, "{}·x + {}", self.ratio, self.trans)
        } else {
            write!(f, "{}·{}x + {}", self.ratio, self.rot, self.trans)
        }
    }
}

impl fmt::Debug for Similarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sim(r: (i64, i64), t: &[(i64, i64)]) -> Similarity {
        Similarity::scaling(Rational::new(r.0, r.1), RatVec::from_pairs(t))
    }

    #[test]
    fn composing_two_quadrant_maps() {
        let s1 = sim((1, 2), &[(-1, 4), (1, 4)]);
        let s2 = sim((1, 2), &[(-1, 4), (-1, 4)]);
        let c = s1.compose(&s2).unwrap();
        assert_eq!(c.ratio(), &Rational::new(1, 4));
        assert_eq!(c.trans(), &RatVec::from_pairs(&[(-3, 8), (1, 8)]));
    }

    #[test]
    fn identity_is_neutral() {
        let s = sim((2, 7), &[(1, 3), (-1, 5)]);
        let id = Similarity::identity(2);
        assert_eq!(id.compose(&s).unwrap(), s);
        assert_eq!(s.compose(&id).unwrap(), s);
        assert!(s.compose(&s.invert()).unwrap().is_identity());
        assert!(id.invert().is_identity());
    }

    #[test]
    fn inverse_of_one_dimensional_map() {
        let f = sim((1, 2), &[(-1, 4)]);
        assert_eq!(f.invert(), sim((2, 1), &[(1, 2)]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Similarity::identity(2);
        let b = Similarity::identity(3);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn image_of_cube_under_quadrant_map() {
        let s1 = sim((1, 2), &[(-1, 4), (1, 4)]);
        let b = s1.image_of_cube();
        assert_eq!(b.lo(), &RatVec::from_pairs(&[(-1, 2), (0, 1)]));
        assert_eq!(b.hi(), &RatVec::from_pairs(&[(0, 1), (1, 2)]));
    }

    #[test]
    fn image_under_swap_with_reflection() {
        let rot = SignedPermutation::new(vec![1, 0], vec![1, -1]).unwrap();
        let f = Similarity::new(Rational::one(), rot, RatVec::zeros(2)).unwrap();
        let b = AxisBox::new(
            RatVec::from_pairs(&[(0, 1), (2, 1)]),
            RatVec::from_pairs(&[(1, 1), (3, 1)]),
        )
        .unwrap();
        let img = f.image_box(&b);
        assert_eq!(img.lo(), &RatVec::from_pairs(&[(2, 1), (-1, 1)]));
        assert_eq!(img.hi(), &RatVec::from_pairs(&[(3, 1), (0, 1)]));
    }
}
