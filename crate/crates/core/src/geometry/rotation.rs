use std::fmt;

use serde::{Deserialize, Serialize};

use super::RatVec;
use crate::error::{Error, Result};

/// Orthogonal map of the form `x ↦ y` with `y[i] = signs[i] · x[perm[i]]`.
///
/// These are exactly the orthogonal maps sending `[-1/2,1/2]^d` onto itself,
/// and they keep every image of an axis-aligned box axis-aligned.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let d = perm.len();
        if signs.len() != d {
            return Err(Error::InvalidRotation(format!(
                "perm has {} entries but signs has {}",
                d,
                signs.len()
            )));
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || seen[p] {
                return Err(Error::InvalidRotation(format!(
                    "{perm:?} is not a permutation of 0..{d}"
                )));
            }
            seen[p] = true;
        }
        if let Some(s) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidRotation(format!("sign {s} is not ±1")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(dim: usize) -> Self {
        SignedPermutation {
            perm: (0..dim).collect(),
            signs: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn apply(&self, x: &RatVec) -> RatVec {
        debug_assert_eq!(x.dim(), self.dim());
        RatVec(
            self.perm
                .iter()
                .zip(&self.signs)
                .map(|(&p, &s)| if s > 0 { x[p].clone() } else { -&x[p] })
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.dim(), other.dim());
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let d = self.dim();
        let mut perm = vec![0; d];
        let mut signs = vec![1; d];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[p] = i;
            signs[p] = s;
        }
        SignedPermutation { perm, signs }
    }

    /// Output axis `i` reads input axis `perm[i]` with sign `signs[i]`.
    pub fn source_axis(&self, i: usize) -> (usize, bool) {
        (self.perm[i], self.signs[i] > 0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}x{}", if s > 0 { "+" } else { "-" }, p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_signed_perms(d: usize) -> Vec<SignedPermutation> {
        fn perms(d: usize) -> Vec<Vec<usize>> {
            if d == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(d - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, d - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut out = Vec::new();
        for p in perms(d) {
            for mask in 0..(1u32 << d) {
                let signs = (0..d)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation::new(p.clone(), signs).unwrap());
            }
        }
        out
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1], vec![1, 2]).is_err());
        assert!(SignedPermutation::new(vec![0, 1], vec![1]).is_err());
    }

    #[test]
    fn group_laws_hold_in_dimension_three() {
        let all = all_signed_perms(3);
        assert_eq!(all.len(), 48);
        let x = RatVec::from_pairs(&[(1, 3), (-2, 5), (7, 11)]);
        for a in &all {
            assert!(a.compose(&a.inverse()).is_identity());
            for b in all.iter().step_by(5) {
                let lhs = a.compose(b).apply(&x);
                let rhs = a.apply(&b.apply(&x));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
