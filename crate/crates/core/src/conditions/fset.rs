use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{RatVec, Rational};
use crate::ifs::{generation, IfsSystem};

/// Normalized difference set `F` of same-generation fixed points.
#[derive(Clone, Debug, Serialize)]
pub struct FsetReport {
    pub elements: Vec<RatVec>,
    /// `|F|` accumulated after each `n = 1..=n_max`.
    pub cumulative_sizes: Vec<usize>,
    /// The set did not grow over the last two values of `n`.
    pub stabilized: bool,
}

/// `r^{-n}(S_σ(0) − S_τ(0))` over `|σ| = |τ| = n` with sup-norm at most 1,
/// accumulated over `n = 1..=n_max`.
pub fn fset_characterization(sys: &IfsSystem, n_max: usize) -> Result<FsetReport> {
    let r = sys.common_ratio().ok_or(Error::NotEquicontractive)?.clone();
    let mut acc: BTreeSet<RatVec> = BTreeSet::new();
    let mut cumulative_sizes = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let scale = r.pow(n as i32);
        let gen = generation(sys, &scale)?;
        let points: BTreeSet<RatVec> = gen.iter().map(|(_, m)| m.trans().clone()).collect();
        let points: Vec<RatVec> = points.into_iter().collect();
        let inv = scale.recip();
        // Bucket by cells of side r^n so that close pairs share or neighbor a cell.
        let cell = |p: &RatVec| -> Vec<BigInt> {
            p.iter()
                .map(|x| {
                    let q = x * &inv;
                    q.numer().div_floor(q.denom())
                })
                .collect()
        };
        let mut buckets: HashMap<Vec<BigInt>, Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            buckets.entry(cell(p)).or_default().push(i);
        }
        let d = sys.dim();
        let one = Rational::one();
        for (i, p) in points.iter().enumerate() {
            let c = cell(p);
            for off in 0..3usize.pow(d as u32) {
                let mut key = c.clone();
                let mut o = off;
                for k in key.iter_mut() {
                    *k += BigInt::from((o % 3) as i64 - 1);
                    o /= 3;
                }
                let Some(list) = buckets.get(&key) else {
                    continue;
                };
                for &j in list {
                    let diff = (&points[i] - &points[j]).scale(&inv);
                    if diff.norm_inf() <= one {
                        acc.insert(diff);
                    }
                }
            }
        }
        acc.insert(RatVec::zeros(d));
        cumulative_sizes.push(acc.len());
    }
    let k = cumulative_sizes.len();
    let stabilized = k >= 3 && cumulative_sizes[k - 1] == cumulative_sizes[k - 3];
    Ok(FsetReport {
        elements: acc.into_iter().collect(),
        cumulative_sizes,
        stabilized,
    })
}
