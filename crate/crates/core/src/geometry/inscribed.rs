use super::{AxisBox, BoxRegion, RatVec, Rational};
use crate::error::{Error, Result};

/// Upper bound on refined cells for the grid dynamic program.
const DP_CELL_CAP: usize = 1 << 22;

/// Largest axis-aligned cube `[a, a + L]^d` inside `r`, with `a` the
/// lexicographically smallest anchor among cubes of that side.
pub fn inscribed_cube(r: &BoxRegion) -> Result<(Rational, RatVec)> {
    if r.is_empty() {
        return Err(Error::EmptyRegion);
    }
    match uniform_unit(r) {
        Some((u, counts)) if counts.iter().product::<usize>() <= DP_CELL_CAP => {
            Ok(grid_dp(r, &u, &counts))
        }
        _ => Ok(binary_search(r)),
    }
}

/// Common unit of all grid spacings and the refined cell count per axis.
fn uniform_unit(r: &BoxRegion) -> Option<(Rational, Vec<usize>)> {
    let mut u = Rational::zero();
    for axis in r.axes() {
        for w in axis.windows(2) {
            u = u.gcd(&(&w[1] - &w[0]));
        }
    }
    let mut counts = Vec::new();
    for axis in r.axes() {
        let n = (&axis[axis.len() - 1] - &axis[0]) / &u;
        counts.push(usize::try_from(n.numer()).ok()?);
    }
    Some((u, counts))
}

fn grid_dp(r: &BoxRegion, u: &Rational, counts: &[usize]) -> (Rational, RatVec) {
    let d = counts.len();
    let origin: Vec<Rational> = r.axes().iter().map(|a| a[0].clone()).collect();
    // Refined cell i on axis k maps to the normal-form cell containing it.
    let to_coarse: Vec<Vec<usize>> = (0..d)
        .map(|k| {
            let axis = &r.axes()[k];
            (0..counts[k])
                .map(|i| {
                    let lo = &origin[k] + &(u * &Rational::integer(i as i64));
                    axis.partition_point(|g| g <= &lo) - 1
                })
                .collect()
        })
        .collect();
    let coarse_shape: Vec<usize> = r.axes().iter().map(|a| a.len() - 1).collect();
    let mut coarse_st = vec![1usize; d];
    let mut st = vec![1usize; d];
    for k in (0..d.saturating_sub(1)).rev() {
        coarse_st[k] = coarse_st[k + 1] * coarse_shape[k + 1];
        st[k] = st[k + 1] * counts[k + 1];
    }
    let total: usize = counts.iter().product();
    let occ = r.occupancy();
    let mut side = vec![0u32; total];
    let mut idx = vec![0usize; d];
    // Reverse row-major order visits every forward neighbor first.
    for flat in (0..total).rev() {
        let mut rem = flat;
        for k in (0..d).rev() {
            idx[k] = rem % counts[k];
            rem /= counts[k];
        }
        let coarse: usize = (0..d).map(|k| to_coarse[k][idx[k]] * coarse_st[k]).sum();
        if !occ[coarse] {
            continue;
        }
        let mut best = u32::MAX;
        for mask in 1u32..(1 << d) {
            let mut nf = flat;
            let mut inside = true;
            for k in 0..d {
                if mask >> k & 1 == 1 {
                    if idx[k] + 1 >= counts[k] {
                        inside = false;
                        break;
                    }
                    nf += st[k];
                }
            }
            best = best.min(if inside { side[nf] } else { 0 });
            if best == 0 {
                break;
            }
        }
        side[flat] = best + 1;
    }
    let (flat, s) = side
        .iter()
        .enumerate()
        .fold((0, 0), |acc, (i, &s)| if s > acc.1 { (i, s) } else { acc });
    let mut rem = flat;
    for k in (0..d).rev() {
        idx[k] = rem % counts[k];
        rem /= counts[k];
    }
    let anchor = RatVec(
        (0..d)
            .map(|k| &origin[k] + &(u * &Rational::integer(idx[k] as i64)))
            .collect(),
    );
    (u * &Rational::integer(i64::from(s)), anchor)
}

fn feasible_anchor(r: &BoxRegion, side: &Rational) -> Option<RatVec> {
    let d = r.dim();
    let per_axis: Vec<Vec<Rational>> = r
        .axes()
        .iter()
        .map(|axis| {
            let mut v: Vec<Rational> = axis.to_vec();
            v.extend(axis.iter().map(|g| g - side));
            v.sort();
            v.dedup();
            v
        })
        .collect();
    let mut idx = vec![0usize; d];
    loop {
        let a = RatVec((0..d).map(|k| per_axis[k][idx[k]].clone()).collect());
        if r.contains_box(&AxisBox::cube(&a, side)) {
            return Some(a);
        }
        let mut k = d;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < per_axis[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn binary_search(r: &BoxRegion) -> (Rational, RatVec) {
    let mut cands: Vec<Rational> = Vec::new();
    for axis in r.axes() {
        for i in 0..axis.len() {
            for j in i + 1..axis.len() {
                cands.push(&axis[j] - &axis[i]);
            }
        }
    }
    cands.sort();
    cands.dedup();
    let (mut lo, mut hi) = (0usize, cands.len());
    let mut best = None;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible_anchor(r, &cands[mid]) {
            Some(a) => {
                best = Some((cands[mid].clone(), a));
                lo = mid + 1;
            }
            None => hi = mid,
        }
    }
    best.expect("a nonempty region contains its smallest cell side")
}

#[cfg(test)]
pub(crate) fn inscribed_cube_by_search(r: &BoxRegion) -> (Rational, RatVec) {
    binary_search(r)
}
