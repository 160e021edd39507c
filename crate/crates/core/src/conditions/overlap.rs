use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{AxisBox, Rational, Similarity};
use crate::ifs::{generation, IfsSystem};

use super::gftc::overlapping_pairs;
use super::GftcSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapRow {
    pub alpha: Rational,
    pub overlapping_pairs: usize,
    /// `min m(S_σ(cube) ∩ S_τ(cube)) / α`; absent without open overlaps.
    pub min_normalized: Option<Rational>,
}

/// Empirical floor of normalized overlaps, with the conservative constants
/// `δ`, `ε_1`, `ε_2` reported as diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapFloor {
    pub eps_hat: Option<Rational>,
    pub table: Vec<OverlapRow>,
    pub delta: Option<Rational>,
    pub eps1: Option<Rational>,
    pub eps2: Option<Rational>,
    pub eps: Option<Rational>,
}

fn min_overlap(boxes: &[AxisBox]) -> (usize, Option<Rational>) {
    let pairs = overlapping_pairs(boxes);
    let m = pairs
        .iter()
        .filter(|(i, j)| boxes[*i] != boxes[*j])
        .filter_map(|&(i, j)| boxes[i].open_intersection(&boxes[j]))
        .map(|b| b.min_side())
        .min();
    (pairs.len(), m)
}

fn distinct_boxes(gen: &[(crate::ifs::Word, Similarity)]) -> Vec<AxisBox> {
    let mut maps: Vec<&Similarity> = gen.iter().map(|(_, m)| m).collect();
    maps.sort();
    maps.dedup();
    maps.into_iter().map(Similarity::image_of_cube).collect()
}

/// Pairs with identical images are not overlaps in the sense measured here;
/// they are the same copy reached by two words.
pub fn overlap_floor(
    sys: &IfsSystem,
    levels: &[Rational],
    gftc: Option<&GftcSet>,
) -> Result<OverlapFloor> {
    if !sys.has_full_support() {
        return Err(Error::TechnicalAssumption(
            "the attractor must be the whole cube".into(),
        ));
    }
    let mut table = Vec::with_capacity(levels.len());
    for alpha in levels {
        let gen = generation(sys, alpha)?;
        let boxes = distinct_boxes(&gen);
        let (pairs, m) = min_overlap(&boxes);
        table.push(OverlapRow {
            alpha: alpha.clone(),
            overlapping_pairs: pairs,
            min_normalized: m.map(|v| v / alpha),
        });
    }
    let eps_hat = table.iter().filter_map(|r| r.min_normalized.clone()).min();

    let r_min = sys.r_min();
    let delta = sys
        .maps()
        .iter()
        .flat_map(|m| {
            m.trans()
                .iter()
                .filter(|x| !x.is_zero())
                .map(Rational::abs)
                .collect::<Vec<_>>()
        })
        .min()
        .map(|v| &r_min * &v);
    // Words with r_σ ≥ r_min² are exactly the members of the generations
    // at or above that threshold.
    let r2 = &r_min * &r_min;
    let mut boxes: Vec<AxisBox> = Vec::new();
    let mut stack = vec![Similarity::identity(sys.dim())];
    while let Some(m) = stack.pop() {
        if m.ratio() < &r2 {
            continue;
        }
        boxes.push(m.image_of_cube());
        for s in sys.maps() {
            stack.push(m.then_unchecked(s));
        }
    }
    boxes.sort();
    boxes.dedup();
    let eps1 = min_overlap(&boxes).1;
    let cube = AxisBox::unit_cube(sys.dim());
    let eps2 = gftc.and_then(|g| {
        g.elements
            .iter()
            .filter_map(|f| cube.open_intersection(&f.image_of_cube()))
            .map(|b| b.min_side())
            .min()
    });
    let eps = match (&eps1, &eps2) {
        (Some(a), Some(b)) => Some(Rational::min_of(a, &(&r_min * b))),
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(&r_min * b),
        (None, None) => None,
    };
    Ok(OverlapFloor {
        eps_hat,
        table,
        delta,
        eps1,
        eps2,
        eps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{center_overlap, corner_tiling};

    fn dyadic_levels(k: i32) -> Vec<Rational> {
        (1..=k).map(|j| Rational::half().pow(j)).collect()
    }

    #[test]
    fn floor_is_scale_invariant() {
        let o = overlap_floor(&center_overlap(), &dyadic_levels(4), None).unwrap();
        assert_eq!(o.eps_hat, Some(Rational::half()));
        assert!(o
            .table
            .iter()
            .all(|row| row.min_normalized == Some(Rational::half())));
    }

    #[test]
    fn tiling_has_no_overlaps() {
        let o = overlap_floor(&corner_tiling(), &dyadic_levels(3), None).unwrap();
        assert_eq!(o.eps_hat, None);
        assert!(o.table.iter().all(|row| row.overlapping_pairs == 0));
    }
}
