use std::fmt;
use std::ops::{Add, Index, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;

/// Point or translation in `Q^d`. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVec(pub Vec<Rational>);

impl RatVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVec(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rational::zero(); dim])
    }

    pub fn splat(dim: usize, value: Rational) -> Self {
        RatVec(vec![value; dim])
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        RatVec(pairs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn scale(&self, k: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.0.iter().map(|x| -x).collect())
    }

    /// Sup-norm.
    pub fn norm_inf(&self) -> Rational {
        self.0
            .iter()
            .map(Rational::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add<&RatVec> for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&RatVec> for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
