use fracnet::geometry::{AxisBox, RatVec, Rational};

/// Largest cube `[a, a+L]^d` inside the union of `boxes`, over anchors and
/// sides on the lattice `grid · Z`. Returns the side and the
/// lexicographically smallest anchor, or `None` when no lattice cube fits.
///
/// Every box corner must lie on the lattice. A lattice cube fits exactly
/// when the center of each of its unit lattice cells lies in some box.
pub fn inscribed_cube_naive(
    boxes: &[AxisBox],
    grid: &Rational,
    max_cells: usize,
) -> Option<(Rational, RatVec)> {
    let d = boxes.first()?.dim();
    let lo: Vec<Rational> = (0..d)
        .map(|j| boxes.iter().map(|b| b.lo()[j].clone()).min().unwrap())
        .collect();
    let hi: Vec<Rational> = (0..d)
        .map(|j| boxes.iter().map(|b| b.hi()[j].clone()).max().unwrap())
        .collect();
    let counts: Vec<usize> = (0..d)
        .map(|j| {
            let n = (&hi[j] - &lo[j]) / grid;
            assert!(n.is_integer(), "box corners must lie on the lattice");
            n.to_f64() as usize
        })
        .collect();
    let total: usize = counts.iter().product();
    assert!(
        total <= max_cells,
        "lattice has {total} cells, cap is {max_cells}"
    );
    let half = Rational::half();
    let filled = |idx: &[usize]| {
        let c: Vec<Rational> = (0..d)
            .map(|j| &lo[j] + &(grid * &(Rational::integer(idx[j] as i64) + half.clone())))
            .collect();
        boxes
            .iter()
            .any(|b| (0..d).all(|j| b.lo()[j] <= c[j] && c[j] <= b.hi()[j]))
    };
    let max_side = *counts.iter().min().unwrap();
    for side in (1..=max_side).rev() {
        let span: Vec<usize> = counts.iter().map(|c| c - side + 1).collect();
        // Row-major over anchors: the first axis varies slowest, which is
        // lexicographic order.
        for flat in 0..span.iter().product::<usize>() {
            let anchor = unflatten(flat, &span);
            if all_cells(&anchor, side, &filled) {
                let a = (0..d)
                    .map(|j| &lo[j] + &(grid * &Rational::integer(anchor[j] as i64)))
                    .collect();
                return Some((grid * &Rational::integer(side as i64), RatVec::new(a)));
            }
        }
    }
    None
}

fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for j in (0..shape.len()).rev() {
        idx[j] = flat % shape[j];
        flat /= shape[j];
    }
    idx
}

fn all_cells(anchor: &[usize], side: usize, filled: &impl Fn(&[usize]) -> bool) -> bool {
    let d = anchor.len();
    (0..side.pow(d as u32)).all(|flat| {
        let off = unflatten(flat, &vec![side; d]);
        let idx: Vec<usize> = (0..d).map(|j| anchor[j] + off[j]).collect();
        filled(&idx)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_cube_has_side_one() {
        let (l, a) =
            inscribed_cube_naive(&[AxisBox::unit_cube(2)], &Rational::new(1, 4), 1000).unwrap();
        assert_eq!(l, Rational::one());
        assert_eq!(a, RatVec::from_pairs(&[(-1, 2), (-1, 2)]));
    }

    #[test]
    fn empty_input_has_no_cube() {
        assert!(inscribed_cube_naive(&[], &Rational::one(), 10).is_none());
    }
}
