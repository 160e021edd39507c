use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use fracnet::geometry::{RatVec, Rational};
use fracnet::ifs::IfsSystem;

type Q = Ratio<i128>;

/// Largest number of words enumerated per call.
pub const WORD_CAP: usize = 1 << 22;

fn small(r: &Rational) -> Q {
    Q::new(
        r.numer().to_i128().expect("fits i128"),
        r.denom().to_i128().expect("fits i128"),
    )
}

fn big(q: &Q) -> Rational {
    Rational::from_big(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

struct Map {
    ratio: Q,
    perm: Vec<usize>,
    signs: Vec<i8>,
    trans: Vec<Q>,
}

impl Map {
    fn apply(&self, x: &[Q]) -> Vec<Q> {
        (0..x.len())
            .map(|i| {
                let v = x[self.perm[i]] * Q::from(i128::from(self.signs[i]));
                v * self.ratio + self.trans[i]
            })
            .collect()
    }
}

/// `S_σ(0)`, `r_σ` and `p_σ` for one word.
struct Image {
    center: Vec<Q>,
    ratio: Q,
    prob: Q,
}

fn images(sys: &IfsSystem, probs: &[Rational], n: usize) -> Result<Vec<Image>, String> {
    let k = sys.len();
    let count = k
        .checked_pow(n as u32)
        .filter(|&c| c <= WORD_CAP)
        .ok_or_else(|| format!("{k}^{n} words exceeds the cap of {WORD_CAP}"))?;
    let d = sys.dim();
    let maps: Vec<Map> = sys
        .maps()
        .iter()
        .map(|m| Map {
            ratio: small(m.ratio()),
            perm: m.rot().perm().to_vec(),
            signs: m.rot().signs().to_vec(),
            trans: m.trans().iter().map(small).collect(),
        })
        .collect();
    let p: Vec<Q> = probs.iter().map(small).collect();
    Ok((0..count)
        .into_par_iter()
        .map(|mut idx| {
            // Base-k digits, most significant first.
            let mut word = vec![0usize; n];
            for slot in word.iter_mut().rev() {
                *slot = idx % k;
                idx /= k;
            }
            let mut center = vec![Q::zero(); d];
            let mut ratio = Q::one();
            let mut prob = Q::one();
            for &j in word.iter().rev() {
                center = maps[j].apply(&center);
            }
            for &j in &word {
                ratio *= maps[j].ratio;
                prob *= p[j];
            }
            Image {
                center,
                ratio,
                prob,
            }
        })
        .collect())
}

/// `Σ p_σ` over words `|σ| = n` whose closed image `S_σ([-1/2,1/2]^d)`
/// contains each point. Assumes the rotations are signed permutations, so
/// every image is the cube of side `r_σ` centered at `S_σ(0)`.
pub fn pn_oracle_many(
    sys: &IfsSystem,
    probs: &[Rational],
    points: &[RatVec],
    n: usize,
) -> Result<Vec<Rational>, String> {
    let imgs = images(sys, probs, n)?;
    // Scale to a common integer lattice so containment is integer comparison.
    let mut lcm: i128 = 2;
    for im in &imgs {
        for c in &im.center {
            lcm = lcm.lcm(c.denom());
        }
        lcm = lcm.lcm(&(im.ratio.denom() * 2));
    }
    let pts: Vec<Vec<Q>> = points
        .iter()
        .map(|x| x.iter().map(small).collect())
        .collect();
    for x in &pts {
        for c in x {
            lcm = lcm.lcm(c.denom());
        }
    }
    let scale = |q: &Q| -> i128 { (q * Q::from(lcm)).to_integer() };
    let grid: Vec<(Vec<i128>, i128)> = imgs
        .iter()
        .map(|im| {
            (
                im.center.iter().map(scale).collect(),
                scale(&(im.ratio / Q::from(2))),
            )
        })
        .collect();
    Ok(pts
        .par_iter()
        .map(|x| {
            let xs: Vec<i128> = x.iter().map(scale).collect();
            let total = grid
                .iter()
                .zip(&imgs)
                .filter(|((c, h), _)| xs.iter().zip(c).all(|(a, b)| (a - b).abs() <= *h))
                .fold(Q::zero(), |acc, (_, im)| acc + im.prob);
            big(&total)
        })
        .collect())
}

pub fn pn_oracle(
    sys: &IfsSystem,
    probs: &[Rational],
    x: &RatVec,
    n: usize,
) -> Result<Rational, String> {
    Ok(pn_oracle_many(sys, probs, std::slice::from_ref(x), n)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_length_is_total_mass() {
        let (sys, p) = fixtures::center_overlap_measure();
        let x = RatVec::from_pairs(&[(1, 7), (-2, 9)]);
        assert_eq!(pn_oracle(&sys, &p, &x, 0).unwrap(), Rational::one());
    }

    #[test]
    fn corner_point_sees_one_chain() {
        let (sys, p) = fixtures::center_overlap_measure();
        let x = RatVec::from_pairs(&[(-1, 2), (1, 2)]);
        for n in 1..4 {
            assert_eq!(
                pn_oracle(&sys, &p, &x, n).unwrap(),
                Rational::new(1, 8).pow(n as i32)
            );
        }
    }

    #[test]
    fn center_includes_the_central_chain() {
        let (sys, p) = fixtures::center_overlap_measure();
        let v = pn_oracle(&sys, &p, &RatVec::zeros(2), 2).unwrap();
        assert!(v > Rational::new(1, 4));
    }

    #[test]
    fn cap_is_enforced() {
        let (sys, p) = fixtures::center_overlap_measure();
        assert!(pn_oracle(&sys, &p, &RatVec::zeros(2), 20).is_err());
    }
}
