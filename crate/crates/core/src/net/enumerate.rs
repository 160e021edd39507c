use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{AxisBox, BoxRegion, Rational, Similarity};
use crate::ifs::{IfsSystem, Word};

use super::subdivide::{subdivide, ChildMap, Piece};
use super::{normalization, CoverMap, NetInterval};

/// Net intervals of one level.
#[derive(Clone, Debug)]
pub struct NetIntervals {
    pub level: Rational,
    pub intervals: Vec<NetInterval>,
    /// False when the attractor test `int(Δ) ∩ K ≠ ∅` used the depth-`k_depth`
    /// cover of `K` instead of `K` itself.
    pub k_exact: bool,
    pub k_depth: usize,
}

/// Evidence that a child region lies in its parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub child_cells: usize,
    pub contained: bool,
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if !alpha.is_positive() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    Ok(())
}

fn assemble(
    level: &Rational,
    parent_words: &[Vec<Word>],
    child_maps: &[ChildMap],
    pieces: Vec<Piece>,
) -> Result<Vec<NetInterval>> {
    let mut out = Vec::with_capacity(pieces.len());
    for p in pieces {
        let cover = p
            .cover
            .iter()
            .map(|&i| {
                let c = &child_maps[i];
                let mut words: Vec<Word> = c
                    .origins
                    .iter()
                    .flat_map(|(row, w)| parent_words[*row].iter().map(move |pw| pw.concat(w)))
                    .collect();
                words.sort();
                CoverMap {
                    map: c.map.clone(),
                    words,
                }
            })
            .collect();
        let norm = normalization(&p.region)?;
        out.push(NetInterval {
            level: level.clone(),
            region: p.region,
            cover,
            norm,
        });
    }
    out.sort_by_key(|n| n.cover_words());
    Ok(out)
}

/// All net intervals at level `alpha`.
///
/// When the system lacks full support, intervals are kept if they meet the
/// interior of the depth-`k_depth` cover of the attractor, and the result is
/// flagged as approximate.
pub fn net_intervals_at(sys: &IfsSystem, alpha: &Rational, k_depth: usize) -> Result<NetIntervals> {
    net_intervals_at_with(sys, alpha, k_depth, Execution::auto())
}

pub fn net_intervals_at_with(
    sys: &IfsSystem,
    alpha: &Rational,
    k_depth: usize,
    exec: Execution,
) -> Result<NetIntervals> {
    check_alpha(alpha)?;
    let cube = BoxRegion::from_box(&AxisBox::unit_cube(sys.dim()));
    let root = [Similarity::identity(sys.dim())];
    let (child_maps, pieces) = subdivide(sys, &root, &cube, alpha, exec);
    let mut intervals = assemble(alpha, &[vec![Word::empty()]], &child_maps, pieces)?;
    let k_exact = sys.has_full_support();
    if !k_exact {
        let k = sys.cover_region(k_depth);
        intervals.retain(|n| !n.region.intersect(&k).map(|r| r.is_empty()).unwrap_or(true));
    }
    Ok(NetIntervals {
        level: alpha.clone(),
        intervals,
        k_exact,
        k_depth,
    })
}

/// Net intervals of level `alpha_child` lying inside `n`.
pub fn children(
    sys: &IfsSystem,
    n: &NetInterval,
    alpha_child: &Rational,
    k_depth: usize,
) -> Result<Vec<(NetInterval, Containment)>> {
    children_with(sys, n, alpha_child, k_depth, Execution::auto())
}

pub fn children_with(
    sys: &IfsSystem,
    n: &NetInterval,
    alpha_child: &Rational,
    k_depth: usize,
    exec: Execution,
) -> Result<Vec<(NetInterval, Containment)>> {
    check_alpha(alpha_child)?;
    if alpha_child >= &n.level {
        return Err(Error::AlphaOutOfRange(format!(
            "child level {alpha_child} must be below {}",
            n.level
        )));
    }
    let kids = if sys.has_full_support() {
        let maps: Vec<Similarity> = n.cover.iter().map(|c| c.map.clone()).collect();
        let words: Vec<Vec<Word>> = n.cover.iter().map(|c| c.words.clone()).collect();
        let (child_maps, pieces) = subdivide(sys, &maps, &n.region, alpha_child, exec);
        assemble(alpha_child, &words, &child_maps, pieces)?
    } else {
        net_intervals_at_with(sys, alpha_child, k_depth, exec)?
            .intervals
            .into_iter()
            .filter(|c| n.region.contains_region(&c.region))
            .collect()
    };
    Ok(kids
        .into_iter()
        .map(|c| {
            let cert = Containment {
                child_cells: c.region.cells().len(),
                contained: n.region.contains_region(&c.region),
            };
            (c, cert)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RatVec;

    fn thirds_ninths() -> IfsSystem {
        IfsSystem::from_scalings(
            1,
            &[
                (Rational::new(1, 3), RatVec::from_pairs(&[(-1, 3)])),
                (Rational::new(1, 3), RatVec::from_pairs(&[(0, 1)])),
                (Rational::new(1, 3), RatVec::from_pairs(&[(1, 3)])),
                (Rational::new(1, 9), RatVec::from_pairs(&[(0, 1)])),
            ],
        )
        .unwrap()
    }

    fn interval(a: (i64, i64), b: (i64, i64)) -> AxisBox {
        AxisBox::new(RatVec::from_pairs(&[a]), RatVec::from_pairs(&[b])).unwrap()
    }

    #[test]
    fn thirds_ninths_at_one_half() {
        let sys = thirds_ninths();
        let net = net_intervals_at(&sys, &Rational::half(), 1).unwrap();
        let regions: Vec<BoxRegion> = net.intervals.iter().map(|n| n.region.clone()).collect();
        let want = [
            BoxRegion::from_box(&interval((-1, 2), (-1, 6))),
            BoxRegion::from_boxes(1, &[interval((-1, 6), (-1, 18)), interval((1, 18), (1, 6))])
                .unwrap(),
            BoxRegion::from_box(&interval((-1, 18), (1, 18))),
            BoxRegion::from_box(&interval((1, 6), (1, 2))),
        ];
        assert_eq!(regions, want);
        assert!(net.k_exact);
        assert_eq!(
            net.intervals[0].neighbor_set(),
            net.intervals[3].neighbor_set()
        );
        let shift = Similarity::scaling(Rational::one(), RatVec::from_pairs(&[(1, 2)]));
        assert_eq!(net.intervals[0].neighbor_set().maps(), &[shift]);
    }

    #[test]
    fn alpha_one_is_the_cube() {
        let sys = thirds_ninths();
        let net = net_intervals_at(&sys, &Rational::one(), 1).unwrap();
        assert_eq!(net.intervals.len(), 1);
        assert_eq!(
            net.intervals[0].region,
            BoxRegion::from_box(&AxisBox::unit_cube(1))
        );
        assert_eq!(net.intervals[0].cover_words(), vec![Word::empty()]);
    }

    #[test]
    fn children_tile_their_parent() {
        let sys = thirds_ninths();
        let net = net_intervals_at(&sys, &Rational::half(), 1).unwrap();
        for n in &net.intervals {
            let kids = children(&sys, n, &Rational::new(1, 6), 1).unwrap();
            let vol: Rational = kids.iter().map(|(c, _)| c.region.volume()).sum();
            assert!(vol >= n.region.volume());
            assert!(kids.iter().all(|(_, cert)| cert.contained));
        }
    }
}
