use std::collections::BTreeMap;

use crate::exec::Execution;
use crate::geometry::region::{arrangement_axes_clipped, cell_memberships};
use crate::geometry::{AxisBox, BoxRegion, Rational, Similarity};
use crate::ifs::{IfsSystem, Word};

/// A distinct child map `N_row ∘ S_ω` with every `(row, ω)` producing it.
#[derive(Clone, Debug)]
pub(crate) struct ChildMap {
    pub map: Similarity,
    pub origins: Vec<(usize, Word)>,
}

/// One child net interval: its region and the indices of its covering maps.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub region: BoxRegion,
    pub cover: Vec<usize>,
}

/// Split `region`, covered by `maps` at the current level, into the net
/// intervals of level `child_level`.
///
/// Child maps are `N ∘ S_ω` with `r_N r_ω ≤ child_level < r_N r_{ω^-}`. Only
/// descendants of the covering maps can meet the interior of the region, so
/// the arrangement is built from those alone. Pieces are cells of the region
/// grouped by the exact set of child maps whose open image contains them.
pub(crate) fn subdivide(
    sys: &IfsSystem,
    maps: &[Similarity],
    region: &BoxRegion,
    child_level: &Rational,
    exec: Execution,
) -> (Vec<ChildMap>, Vec<Piece>) {
    let Some(bbox) = region.bounding_box() else {
        return (Vec::new(), Vec::new());
    };
    let per_row = exec.map_range(maps.len(), |row| {
        let mut out = Vec::new();
        descend(sys, &maps[row], Word::empty(), child_level, &bbox, &mut out);
        out.into_iter()
            .map(move |(w, m)| (row, w, m))
            .collect::<Vec<_>>()
    });
    let mut grouped: BTreeMap<Similarity, Vec<(usize, Word)>> = BTreeMap::new();
    for (row, w, m) in per_row.into_iter().flatten() {
        grouped.entry(m).or_default().push((row, w));
    }
    let candidates: Vec<ChildMap> = grouped
        .into_iter()
        .map(|(map, mut origins)| {
            origins.sort();
            ChildMap { map, origins }
        })
        .collect();
    let boxes: Vec<AxisBox> = candidates.iter().map(|c| c.map.image_of_cube()).collect();
    let axes = arrangement_axes_clipped(region, &boxes);
    let inside = region.resample(&axes);
    let member = cell_memberships(&axes, &boxes);

    let mut by_signature: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (flat, sig) in member.iter().enumerate() {
        if inside[flat] && !sig.is_empty() {
            by_signature.entry(sig.as_slice()).or_default().push(flat);
        }
    }
    // Keep only child maps that actually cover part of the region.
    let mut used = vec![false; candidates.len()];
    for sig in by_signature.keys() {
        for &i in *sig {
            used[i] = true;
        }
    }
    let mut remap = vec![usize::MAX; candidates.len()];
    let mut child_maps = Vec::new();
    for (i, c) in candidates.into_iter().enumerate() {
        if used[i] {
            remap[i] = child_maps.len();
            child_maps.push(c);
        }
    }
    let total = inside.len();
    let pieces = by_signature
        .into_iter()
        .map(|(sig, cells)| {
            let mut occ = vec![false; total];
            for c in cells {
                occ[c] = true;
            }
            Piece {
                region: BoxRegion::from_grid(region.dim(), axes.clone(), occ),
                cover: sig.iter().map(|&i| remap[i]).collect(),
            }
        })
        .collect();
    (child_maps, pieces)
}

fn descend(
    sys: &IfsSystem,
    map: &Similarity,
    word: Word,
    level: &Rational,
    bbox: &AxisBox,
    out: &mut Vec<(Word, Similarity)>,
) {
    if !map.image_of_cube().interiors_meet(bbox) {
        return;
    }
    if map.ratio() <= level {
        out.push((word, map.clone()));
        return;
    }
    for (i, m) in sys.maps().iter().enumerate() {
        descend(
            sys,
            &map.then_unchecked(m),
            word.push(i as u32),
            level,
            bbox,
            out,
        );
    }
}
