use std::fmt;

use serde::{Serialize, Serializer};

use super::{AxisBox, RatVec, Rational, Similarity};
use crate::error::{Error, Result};

/// Closed set formed as the closure of a union of cells of a rectilinear grid.
///
/// The grid is kept in normal form: a grid line survives only when the
/// occupancy on its two sides differs (the outside counts as empty). Two
/// regions are equal as point sets exactly when their normal forms are equal,
/// so the derived `Eq` is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxRegion {
    dim: usize,
    axes: Vec<Vec<Rational>>,
    occ: Vec<bool>,
}

/// Strides for a row-major layout with the last axis fastest.
fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for k in (0..shape.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * shape[k + 1];
    }
    s
}

fn shape_of(axes: &[Vec<Rational>]) -> Vec<usize> {
    axes.iter().map(|a| a.len().saturating_sub(1)).collect()
}

fn unflatten(mut flat: usize, shape: &[usize], out: &mut [usize]) {
    for k in (0..shape.len()).rev() {
        out[k] = flat % shape[k];
        flat /= shape[k];
    }
}

fn sorted_dedup(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

/// Index range `[i0, i1)` of grid cells covered by `[lo, hi]` on one axis.
fn cell_range(lines: &[Rational], lo: &Rational, hi: &Rational) -> (usize, usize) {
    let cells = lines.len().saturating_sub(1);
    let i0 = lines.partition_point(|g| g < lo).min(cells);
    let i1 = lines.partition_point(|g| g < hi).min(cells);
    (i0, i1)
}

/// Grid lines of the arrangement of `boxes`, per axis.
pub(crate) fn arrangement_axes<'a, I>(dim: usize, boxes: I) -> Vec<Vec<Rational>>
where
    I: IntoIterator<Item = &'a AxisBox>,
{
    let mut axes: Vec<Vec<Rational>> = vec![Vec::new(); dim];
    for b in boxes {
        for (k, axis) in axes.iter_mut().enumerate() {
            axis.push(b.lo()[k].clone());
            axis.push(b.hi()[k].clone());
        }
    }
    axes.into_iter().map(sorted_dedup).collect()
}

/// Grid lines of `region` together with every box coordinate that falls
/// inside the region's bounding box.
pub(crate) fn arrangement_axes_clipped(
    region: &BoxRegion,
    boxes: &[AxisBox],
) -> Vec<Vec<Rational>> {
    (0..region.dim())
        .map(|k| {
            let own = &region.axes()[k];
            let (lo, hi) = (&own[0], &own[own.len() - 1]);
            let mut v = own.clone();
            for b in boxes {
                for g in [&b.lo()[k], &b.hi()[k]] {
                    if lo < g && g < hi {
                        v.push(g.clone());
                    }
                }
            }
            sorted_dedup(v)
        })
        .collect()
}

/// For every cell of the grid, the indices of the boxes containing it.
pub(crate) fn cell_memberships(axes: &[Vec<Rational>], boxes: &[AxisBox]) -> Vec<Vec<usize>> {
    let shape = shape_of(axes);
    let total: usize = shape.iter().product();
    let st = strides(&shape);
    let mut member = vec![Vec::new(); total];
    let d = axes.len();
    for (bi, b) in boxes.iter().enumerate() {
        let ranges: Vec<(usize, usize)> = (0..d)
            .map(|k| cell_range(&axes[k], &b.lo()[k], &b.hi()[k]))
            .collect();
        if ranges.iter().any(|(a, c)| a >= c) {
            continue;
        }
        for_each_in_block(&ranges, |idx| {
            let flat: usize = idx.iter().zip(&st).map(|(i, s)| i * s).sum();
            member[flat].push(bi);
        });
    }
    member
}

fn for_each_in_block(ranges: &[(usize, usize)], mut f: impl FnMut(&[usize])) {
    let d = ranges.len();
    if ranges.iter().any(|(a, b)| a >= b) {
        return;
    }
    let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
    loop {
        f(&idx);
        let mut k = d;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ranges[k].1 {
                break;
            }
            idx[k] = ranges[k].0;
        }
    }
}

/// Closure of `(⋂ closed_in) \ (⋃ open_out)`, where `open_out` boxes are
/// taken with open-interior semantics.
///
/// An empty `closed_in` or an empty intersection yields the empty region.
pub fn region_from_signature(closed_in: &[AxisBox], open_out: &[AxisBox]) -> Result<BoxRegion> {
    let Some(first) = closed_in.first() else {
        return Err(Error::EmptyRegion);
    };
    let dim = first.dim();
    for b in closed_in.iter().chain(open_out) {
        if b.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.dim(),
            });
        }
    }
    let mut meet = first.clone();
    for b in &closed_in[1..] {
        match meet.open_intersection(b) {
            Some(m) => meet = m,
            None => return Ok(BoxRegion::empty(dim)),
        }
    }
    // Clipped to the meet so the arrangement never extends past it.
    let relevant: Vec<AxisBox> = open_out
        .iter()
        .filter_map(|b| b.open_intersection(&meet))
        .collect();
    let axes = arrangement_axes(dim, std::iter::once(&meet).chain(relevant.iter()));
    let member = cell_memberships(&axes, &relevant);
    let occ = member.iter().map(|m| m.is_empty()).collect();
    Ok(BoxRegion::from_grid(dim, axes, occ))
}

impl BoxRegion {
    pub fn empty(dim: usize) -> Self {
        BoxRegion {
            dim,
            axes: vec![Vec::new(); dim],
            occ: Vec::new(),
        }
    }

    pub fn from_box(b: &AxisBox) -> Self {
        let axes = (0..b.dim())
            .map(|k| vec![b.lo()[k].clone(), b.hi()[k].clone()])
            .collect();
        BoxRegion {
            dim: b.dim(),
            axes,
            occ: vec![true],
        }
    }

    /// Union of closed boxes.
    pub fn from_boxes(dim: usize, boxes: &[AxisBox]) -> Result<Self> {
        if let Some(b) = boxes.iter().find(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.dim(),
            });
        }
        let axes = arrangement_axes(dim, boxes);
        let member = cell_memberships(&axes, boxes);
        let occ = member.iter().map(|m| !m.is_empty()).collect();
        Ok(BoxRegion::from_grid(dim, axes, occ))
    }

    /// Build from an explicit grid and occupancy (last axis fastest), then
    /// reduce to normal form.
    pub(crate) fn from_grid(dim: usize, axes: Vec<Vec<Rational>>, occ: Vec<bool>) -> Self {
        debug_assert_eq!(occ.len(), shape_of(&axes).iter().product::<usize>());
        let mut r = BoxRegion { dim, axes, occ };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if !self.occ.iter().any(|&b| b) {
            *self = BoxRegion::empty(self.dim);
            return;
        }
        for k in 0..self.dim {
            let mut j = 0;
            while j < self.axes[k].len() {
                if self.line_is_redundant(k, j) {
                    self.remove_line(k, j);
                    j = j.saturating_sub(1);
                } else {
                    j += 1;
                }
            }
        }
    }

    fn slab(&self, k: usize, j: usize) -> Vec<bool> {
        let shape = shape_of(&self.axes);
        let mut idx = vec![0; self.dim];
        let mut out = Vec::new();
        for (flat, &v) in self.occ.iter().enumerate() {
            unflatten(flat, &shape, &mut idx);
            if idx[k] == j {
                out.push(v);
            }
        }
        out
    }

    fn line_is_redundant(&self, k: usize, j: usize) -> bool {
        let n = self.axes[k].len() - 1;
        let before = (j > 0).then(|| self.slab(k, j - 1));
        let after = (j < n).then(|| self.slab(k, j));
        match (before, after) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) | (None, Some(a)) => a.iter().all(|v| !v),
            (None, None) => true,
        }
    }

    fn remove_line(&mut self, k: usize, j: usize) {
        let shape = shape_of(&self.axes);
        let n = shape[k];
        // Slab dropped together with the line; the surviving neighbor absorbs it.
        let drop = if j == n { n - 1 } else { j };
        let mut idx = vec![0; self.dim];
        let mut occ = Vec::with_capacity(self.occ.len());
        for (flat, &v) in self.occ.iter().enumerate() {
            unflatten(flat, &shape, &mut idx);
            if idx[k] != drop {
                occ.push(v);
            }
        }
        self.axes[k].remove(j);
        if self.axes[k].len() < 2 {
            *self = BoxRegion::empty(self.dim);
            return;
        }
        self.occ = occ;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.occ.is_empty()
    }

    /// Normal-form grid lines per axis.
    pub fn axes(&self) -> &[Vec<Rational>] {
        &self.axes
    }

    fn shape(&self) -> Vec<usize> {
        shape_of(&self.axes)
    }

    fn cell_box(&self, idx: &[usize]) -> AxisBox {
        let lo = RatVec(
            (0..self.dim)
                .map(|k| self.axes[k][idx[k]].clone())
                .collect(),
        );
        let hi = RatVec(
            (0..self.dim)
                .map(|k| self.axes[k][idx[k] + 1].clone())
                .collect(),
        );
        AxisBox::new_unchecked(lo, hi)
    }

    /// Occupied cells of the normal-form grid, in row-major order.
    pub fn cells(&self) -> Vec<AxisBox> {
        let shape = self.shape();
        let mut idx = vec![0; self.dim];
        let mut out = Vec::new();
        for (flat, &v) in self.occ.iter().enumerate() {
            if v {
                unflatten(flat, &shape, &mut idx);
                out.push(self.cell_box(&idx));
            }
        }
        out
    }

    pub fn volume(&self) -> Rational {
        self.cells().iter().map(AxisBox::volume).sum()
    }

    pub fn bounding_box(&self) -> Option<AxisBox> {
        if self.is_empty() {
            return None;
        }
        let lo = RatVec(self.axes.iter().map(|a| a[0].clone()).collect());
        let hi = RatVec(self.axes.iter().map(|a| a[a.len() - 1].clone()).collect());
        Some(AxisBox::new_unchecked(lo, hi))
    }

    /// Occupancy resampled onto a finer grid that contains every line of `self`.
    pub(crate) fn resample(&self, axes: &[Vec<Rational>]) -> Vec<bool> {
        let shape = shape_of(axes);
        let total: usize = shape.iter().product();
        if self.is_empty() {
            return vec![false; total];
        }
        let own_shape = self.shape();
        let own_st = strides(&own_shape);
        // For each new cell index on each axis, the old cell index it lies in.
        let maps: Vec<Vec<Option<usize>>> = (0..self.dim)
            .map(|k| {
                let old = &self.axes[k];
                (0..shape[k])
                    .map(|i| {
                        let lo = &axes[k][i];
                        let hi = &axes[k][i + 1];
                        if lo < &old[0] || hi > &old[old.len() - 1] {
                            None
                        } else {
                            Some(old.partition_point(|g| g <= lo) - 1)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut idx = vec![0; self.dim];
        (0..total)
            .map(|flat| {
                unflatten(flat, &shape, &mut idx);
                let mut of = 0;
                for k in 0..self.dim {
                    match maps[k][idx[k]] {
                        Some(i) => of += i * own_st[k],
                        None => return false,
                    }
                }
                self.occ[of]
            })
            .collect()
    }

    fn merged_axes(&self, other: &BoxRegion) -> Vec<Vec<Rational>> {
        (0..self.dim)
            .map(|k| {
                let mut v = self.axes[k].clone();
                v.extend(other.axes[k].iter().cloned());
                sorted_dedup(v)
            })
            .collect()
    }

    fn combine(&self, other: &BoxRegion, op: impl Fn(bool, bool) -> bool) -> Result<BoxRegion> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let axes = self.merged_axes(other);
        if axes.iter().any(|a| a.len() < 2) {
            // Both operands empty.
            let occ = Vec::new();
            return Ok(BoxRegion::from_grid(
                self.dim,
                vec![Vec::new(); self.dim],
                occ,
            ));
        }
        let a = self.resample(&axes);
        let b = other.resample(&axes);
        let occ = a.iter().zip(&b).map(|(&x, &y)| op(x, y)).collect();
        Ok(BoxRegion::from_grid(self.dim, axes, occ))
    }

    pub fn union(&self, other: &BoxRegion) -> Result<BoxRegion> {
        self.combine(other, |a, b| a || b)
    }

    /// Closure of the interior intersection; lower-dimensional contacts vanish.
    pub fn intersect(&self, other: &BoxRegion) -> Result<BoxRegion> {
        self.combine(other, |a, b| a && b)
    }

    /// Closure of `self` minus the interior of `other`.
    pub fn subtract(&self, other: &BoxRegion) -> Result<BoxRegion> {
        self.combine(other, |a, b| a && !b)
    }

    pub fn contains_box(&self, b: &AxisBox) -> bool {
        if self.is_empty() || b.dim() != self.dim {
            return false;
        }
        self.subtract_box_is_empty(b)
    }

    fn subtract_box_is_empty(&self, b: &AxisBox) -> bool {
        BoxRegion::from_box(b)
            .subtract(self)
            .map(|r| r.is_empty())
            .unwrap_or(false)
    }

    pub fn contains_region(&self, other: &BoxRegion) -> bool {
        other.subtract(self).map(|r| r.is_empty()).unwrap_or(false)
    }

    /// Closed-set membership.
    pub fn contains_point(&self, p: &RatVec) -> bool {
        self.cells().iter().any(|c| c.contains_point(p))
    }

    /// Whether `p` lies in the interior of an occupied cell.
    pub fn cell_interior_contains(&self, p: &RatVec) -> bool {
        self.cells().iter().any(|c| c.interior_contains_point(p))
    }

    /// Number of connected components of the closed set.
    pub fn component_count(&self) -> usize {
        let cells = self.cells();
        let n = cells.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            for j in i + 1..n {
                if cells[i].closed_meet(&cells[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Image under a similarity.
    pub fn transform(&self, f: &Similarity) -> BoxRegion {
        if self.is_empty() {
            return self.clone();
        }
        let d = self.dim;
        let mut axes = Vec::with_capacity(d);
        for i in 0..d {
            let (src, positive) = f.rot().source_axis(i);
            let scale = if positive {
                f.ratio().clone()
            } else {
                -f.ratio()
            };
            let mut line: Vec<Rational> = self.axes[src]
                .iter()
                .map(|g| &scale * g + &f.trans()[i])
                .collect();
            if !positive {
                line.reverse();
            }
            axes.push(line);
        }
        let own_shape = self.shape();
        let own_st = strides(&own_shape);
        let shape = shape_of(&axes);
        let total: usize = shape.iter().product();
        let mut idx = vec![0; d];
        let occ = (0..total)
            .map(|flat| {
                unflatten(flat, &shape, &mut idx);
                let mut of = 0;
                for i in 0..d {
                    let (src, positive) = f.rot().source_axis(i);
                    let j = if positive {
                        idx[i]
                    } else {
                        shape[i] - 1 - idx[i]
                    };
                    of += j * own_st[src];
                }
                self.occ[of]
            })
            .collect();
        BoxRegion::from_grid(d, axes, occ)
    }

    /// Occupancy of the normal-form grid (last axis fastest).
    pub(crate) fn occupancy(&self) -> &[bool] {
        &self.occ
    }
}

impl fmt::Display for BoxRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.cells().iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoxRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BoxRegion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cells().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(a: (i64, i64), b: (i64, i64)) -> AxisBox {
        AxisBox::new(RatVec::from_pairs(&[a]), RatVec::from_pairs(&[b])).unwrap()
    }

    fn rect(lo: [(i64, i64); 2], hi: [(i64, i64); 2]) -> AxisBox {
        AxisBox::new(RatVec::from_pairs(&lo), RatVec::from_pairs(&hi)).unwrap()
    }

    #[test]
    fn punctured_interval() {
        let r = region_from_signature(&[interval((-1, 2), (1, 2))], &[interval((-1, 18), (1, 18))])
            .unwrap();
        let want =
            BoxRegion::from_boxes(1, &[interval((-1, 2), (-1, 18)), interval((1, 18), (1, 2))])
                .unwrap();
        assert_eq!(r, want);
        assert_eq!(r.component_count(), 2);
        assert_eq!(r.volume(), Rational::new(8, 9));
    }

    #[test]
    fn excluded_box_overhanging_the_meet() {
        let r = region_from_signature(
            &[rect([(0, 1), (-1, 2)], [(1, 4), (0, 1)])],
            &[rect([(0, 1), (-1, 4)], [(1, 2), (0, 1)])],
        )
        .unwrap();
        let want = BoxRegion::from_box(&rect([(0, 1), (-1, 2)], [(1, 4), (-1, 4)]));
        assert_eq!(r, want);
    }

    #[test]
    fn adjacent_boxes_merge_to_normal_form() {
        let a = BoxRegion::from_boxes(
            2,
            &[
                rect([(0, 1), (0, 1)], [(1, 1), (1, 1)]),
                rect([(1, 1), (0, 1)], [(2, 1), (1, 1)]),
            ],
        )
        .unwrap();
        let b = BoxRegion::from_box(&rect([(0, 1), (0, 1)], [(2, 1), (1, 1)]));
        assert_eq!(a, b);
        assert_eq!(a.cells().len(), 1);
    }

    #[test]
    fn square_minus_open_square() {
        let sq = BoxRegion::from_box(&rect([(0, 1), (0, 1)], [(1, 1), (1, 1)]));
        let hole = BoxRegion::from_box(&rect([(1, 2), (1, 2)], [(3, 2), (3, 2)]));
        let d = sq.subtract(&hole).unwrap();
        assert_eq!(d.volume(), Rational::new(3, 4));
        assert!(d.contains_point(&RatVec::from_pairs(&[(1, 2), (1, 2)])));
        assert!(!d.cell_interior_contains(&RatVec::from_pairs(&[(3, 4), (3, 4)])));
    }

    #[test]
    fn trivial_algebra() {
        let a = BoxRegion::from_box(&rect([(0, 1), (0, 1)], [(1, 1), (2, 1)]));
        let e = BoxRegion::empty(2);
        assert_eq!(a.union(&e).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.subtract(&a).unwrap().is_empty());
        assert!(e.union(&e).unwrap().is_empty());
    }

    #[test]
    fn transform_matches_box_image() {
        let rot = super::super::SignedPermutation::new(vec![1, 0], vec![1, -1]).unwrap();
        let f = Similarity::new(
            Rational::new(1, 3),
            rot,
            RatVec::from_pairs(&[(1, 5), (0, 1)]),
        )
        .unwrap();
        let b = rect([(0, 1), (2, 1)], [(1, 1), (3, 1)]);
        let l = BoxRegion::from_boxes(2, &[b.clone(), rect([(1, 1), (2, 1)], [(2, 1), (5, 2)])])
            .unwrap();
        let img = l.transform(&f);
        let want = BoxRegion::from_boxes(
            2,
            &l.cells().iter().map(|c| f.image_box(c)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(img, want);
    }
}
