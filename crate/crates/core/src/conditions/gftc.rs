use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{AxisBox, Rational, Similarity};
use crate::ifs::{generation_with, IfsSystem};

use super::{FncReport, FncStatus};

/// Truncated overlap-map set `{S_σ^{-1} ∘ S_τ}` over same-generation pairs
/// whose open images meet.
#[derive(Clone, Debug, Serialize)]
pub struct GftcSet {
    pub elements: Vec<Similarity>,
    pub truncation_alpha: Rational,
    /// Generation thresholds visited, largest first.
    pub levels: Vec<Rational>,
    /// Size of the accumulated set after each threshold.
    pub cumulative_sizes: Vec<usize>,
    pub contains_identity: bool,
    pub inverse_closed: bool,
    /// `{N_i^{-1} ∘ N_j}` over all pairs within each discovered neighbor set,
    /// present when exploration closed.
    pub witness: Option<Vec<Similarity>>,
    pub contained_in_witness: Option<bool>,
}

/// Distinct values `r_σ ≥ floor`, largest first.
fn thresholds(sys: &IfsSystem, floor: &Rational) -> Vec<Rational> {
    let mut seen: BTreeSet<Rational> = BTreeSet::new();
    let mut stack = vec![Rational::one()];
    while let Some(r) = stack.pop() {
        if &r < floor || !seen.insert(r.clone()) {
            continue;
        }
        for m in sys.maps() {
            stack.push(&r * m.ratio());
        }
    }
    seen.into_iter().rev().collect()
}

/// Pairs of boxes whose interiors meet, found by a sweep along the first axis.
pub(crate) fn overlapping_pairs(boxes: &[AxisBox]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&a, &b| boxes[a].lo()[0].cmp(&boxes[b].lo()[0]));
    let mut out = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if boxes[j].lo()[0] >= boxes[i].hi()[0] {
                break;
            }
            if boxes[i].interiors_meet(&boxes[j]) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort();
    out
}

pub fn gftc_set(
    sys: &IfsSystem,
    truncation_alpha: &Rational,
    fnc: Option<&FncReport>,
) -> Result<GftcSet> {
    gftc_set_with(sys, truncation_alpha, fnc, Execution::auto())
}

pub fn gftc_set_with(
    sys: &IfsSystem,
    truncation_alpha: &Rational,
    fnc: Option<&FncReport>,
    exec: Execution,
) -> Result<GftcSet> {
    if !truncation_alpha.is_positive() || truncation_alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(truncation_alpha.to_string()));
    }
    let levels = thresholds(sys, truncation_alpha);
    let mut acc: BTreeSet<Similarity> = BTreeSet::new();
    acc.insert(Similarity::identity(sys.dim()));
    let mut cumulative_sizes = Vec::with_capacity(levels.len());
    for alpha in &levels {
        let gen = generation_with(sys, alpha, exec)?;
        let maps: Vec<Similarity> = gen.into_iter().map(|(_, m)| m).collect();
        let boxes: Vec<AxisBox> = maps.iter().map(Similarity::image_of_cube).collect();
        let pairs = overlapping_pairs(&boxes);
        let found = exec.map(&pairs, |&(i, j)| {
            let si = maps[i].invert();
            let sj = maps[j].invert();
            [si.then_unchecked(&maps[j]), sj.then_unchecked(&maps[i])]
        });
        acc.extend(found.into_iter().flatten());
        cumulative_sizes.push(acc.len());
    }
    let elements: Vec<Similarity> = acc.iter().cloned().collect();
    let contains_identity = elements.iter().any(Similarity::is_identity);
    let inverse_closed = elements.iter().all(|e| acc.contains(&e.invert()));
    let witness = fnc.filter(|r| r.status == FncStatus::FncDetected).map(|r| {
        let mut w: BTreeSet<Similarity> = BTreeSet::new();
        for t in &r.types {
            let ns = t.neighbors().maps();
            for a in ns {
                let ai = a.invert();
                for b in ns {
                    w.insert(ai.then_unchecked(b));
                }
            }
        }
        w
    });
    let contained_in_witness = witness
        .as_ref()
        .map(|w| elements.iter().all(|e| w.contains(e)));
    Ok(GftcSet {
        elements,
        truncation_alpha: truncation_alpha.clone(),
        levels,
        cumulative_sizes,
        contains_identity,
        inverse_closed,
        witness: witness.map(|w| w.into_iter().collect()),
        contained_in_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{explore_fnc, ExploreOptions};
    use crate::testing::{center_overlap, corner_tiling};

    #[test]
    fn tiling_overlaps_only_with_itself() {
        let sys = corner_tiling();
        let g = gftc_set(&sys, &Rational::new(1, 16), None).unwrap();
        assert_eq!(g.elements, vec![Similarity::identity(2)]);
        assert!(g.witness.is_none());
    }

    #[test]
    fn center_overlap_set_is_small_and_symmetric() {
        let sys = center_overlap();
        let fnc = explore_fnc(&sys, &ExploreOptions::default());
        let g = gftc_set(&sys, &Rational::new(1, 16), Some(&fnc)).unwrap();
        assert_eq!(g.elements.len(), 5);
        assert!(g.contains_identity && g.inverse_closed);
        assert_eq!(g.contained_in_witness, Some(true));
        assert_eq!(g.cumulative_sizes.last(), Some(&5));
    }

    #[test]
    fn sweep_finds_interior_overlaps_only() {
        let b = |lo: (i64, i64), hi: (i64, i64)| {
            AxisBox::new(
                crate::geometry::RatVec::from_pairs(&[lo, (0, 1)]),
                crate::geometry::RatVec::from_pairs(&[hi, (1, 1)]),
            )
            .unwrap()
        };
        let boxes = [b((0, 1), (1, 1)), b((1, 1), (2, 1)), b((1, 2), (3, 2))];
        assert_eq!(overlapping_pairs(&boxes), vec![(0, 2), (1, 2)]);
    }
}
