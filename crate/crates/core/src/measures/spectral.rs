use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::classes::strongly_connected_components;
use crate::geometry::Rational;

/// Rational enclosure of the spectral radius of a nonnegative matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralBound {
    pub lower: Rational,
    pub upper: Rational,
    /// Set when the radius is certified to be this rational.
    pub exact: Option<Rational>,
    pub estimate: f64,
}

impl SpectralBound {
    fn exactly(r: Rational) -> Self {
        SpectralBound {
            estimate: r.to_f64(),
            lower: r.clone(),
            upper: r.clone(),
            exact: Some(r),
        }
    }
}

const POWER_ITERATIONS: usize = 4000;
const SCALE_BITS: u32 = 40;
const MAX_CANDIDATE_DENOM: i64 = 1 << 20;

/// Spectral radius of a nonnegative square matrix.
pub fn spectral_radius(m: &[Vec<Rational>]) -> SpectralBound {
    growth_rate(m, &vec![true; m.len()])
}

/// Exponential growth rate of `u · M^k · 1` for a nonnegative row vector `u`
/// with support `start`: the largest radius among diagonal blocks reachable
/// from the support.
pub fn growth_rate(m: &[Vec<Rational>], start: &[bool]) -> SpectralBound {
    let n = m.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| !m[i][j].is_zero()).collect())
        .collect();
    let mut seen = start.to_vec();
    let mut stack: Vec<usize> = (0..n).filter(|&i| start[i]).collect();
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    let blocks: Vec<SpectralBound> = strongly_connected_components(&adj)
        .into_iter()
        .filter(|c| seen[c[0]])
        .map(|c| block_radius(m, &c))
        .collect();
    combine(blocks)
}

fn combine(blocks: Vec<SpectralBound>) -> SpectralBound {
    let Some(lower) = blocks.iter().map(|b| b.lower.clone()).max() else {
        return SpectralBound::exactly(Rational::zero());
    };
    let upper = blocks
        .iter()
        .map(|b| b.upper.clone())
        .max()
        .expect("nonempty");
    let estimate = blocks.iter().map(|b| b.estimate).fold(0.0, f64::max);
    let exact = blocks
        .iter()
        .filter_map(|b| b.exact.clone())
        .find(|e| blocks.iter().all(|b| &b.upper <= e));
    match exact {
        Some(e) => SpectralBound::exactly(e),
        None => SpectralBound {
            lower,
            upper,
            exact: None,
            estimate,
        },
    }
}

fn block_radius(m: &[Vec<Rational>], idx: &[usize]) -> SpectralBound {
    if idx.len() == 1 {
        return SpectralBound::exactly(m[idx[0]][idx[0]].clone());
    }
    let b: Vec<Vec<Rational>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect();
    let (v, estimate) = perron_vector_f64(&b);
    let scale = f64::from(1u32 << 20) * f64::from(1u32 << (SCALE_BITS - 20));
    let den = BigInt::from(1u64 << SCALE_BITS);
    let x: Vec<Rational> = v
        .iter()
        .map(|&c| {
            let k = (c * scale).round().max(1.0);
            Rational::from_big(BigInt::from(k as u64), den.clone())
        })
        .collect();
    let (lower, upper) = collatz_wielandt(&b, &x);
    if lower == upper {
        return SpectralBound::exactly(lower);
    }
    for cand in candidates(estimate, &lower, &upper) {
        if has_positive_eigenvector(&b, &cand) {
            return SpectralBound::exactly(cand);
        }
    }
    SpectralBound {
        lower,
        upper,
        exact: None,
        estimate,
    }
}

/// Power iteration on `B/s + I`, which is primitive for irreducible `B` and
/// shares its Perron vector. Scaling by the largest entry `s` keeps the shift
/// from swamping the spectral gap when the entries are tiny.
fn perron_vector_f64(b: &[Vec<Rational>]) -> (Vec<f64>, f64) {
    let n = b.len();
    let s = b.iter().flatten().map(Rational::to_f64).fold(0.0, f64::max);
    if s == 0.0 {
        return (vec![1.0; n], 0.0);
    }
    let bf: Vec<Vec<f64>> = b
        .iter()
        .map(|r| r.iter().map(|v| v.to_f64() / s).collect())
        .collect();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..POWER_ITERATIONS {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + (0..n).map(|j| bf[i][j] * x[j]).sum::<f64>())
            .collect();
        let norm = y.iter().copied().fold(0.0, f64::max);
        let next: Vec<f64> = y.iter().map(|v| v / norm).collect();
        let delta = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = next;
        lambda = (norm - 1.0) * s;
        if delta < 1e-15 {
            break;
        }
    }
    (x, lambda)
}

/// `min_i (Bx)_i / x_i ≤ ρ(B) ≤ max_i (Bx)_i / x_i` for irreducible `B` and
/// positive `x`.
fn collatz_wielandt(b: &[Vec<Rational>], x: &[Rational]) -> (Rational, Rational) {
    let ratios: Vec<Rational> = b
        .iter()
        .zip(x)
        .map(|(row, xi)| {
            let bx: Rational = row
                .iter()
                .zip(x)
                .filter(|(a, _)| !a.is_zero())
                .map(|(a, c)| a * c)
                .sum();
            bx / xi
        })
        .collect();
    let lo = ratios.iter().min().cloned().expect("block is nonempty");
    let hi = ratios.iter().max().cloned().expect("block is nonempty");
    (lo, hi)
}

/// Continued-fraction convergents of `t` inside `[lo, hi]`.
fn candidates(t: f64, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut x = t;
    for _ in 0..40 {
        let a = x.floor();
        if !a.is_finite() || a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let (Some(h2), Some(k2)) = (
            a.checked_mul(h1).and_then(|v| v.checked_add(h0)),
            a.checked_mul(k1).and_then(|v| v.checked_add(k0)),
        ) else {
            break;
        };
        if k2 > MAX_CANDIDATE_DENOM {
            break;
        }
        let c = Rational::new(h2, k2);
        if &c >= lo && &c <= hi {
            out.push(c);
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = x - a as f64;
        if frac.abs() < 1e-18 {
            break;
        }
        x = 1.0 / frac;
    }
    out
}

/// Whether `B v = λ v` has a strictly positive solution. By Perron-Frobenius
/// only the spectral radius admits one.
fn has_positive_eigenvector(b: &[Vec<Rational>], lambda: &Rational) -> bool {
    let n = b.len();
    let mut a: Vec<Vec<Rational>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| if i == j { v - lambda } else { v.clone() })
                .collect()
        })
        .collect();
    let basis = nullspace(&mut a);
    if basis.len() != 1 {
        return false;
    }
    let v = &basis[0];
    debug_assert_eq!(v.len(), n);
    v.iter().all(Rational::is_positive) || v.iter().all(Rational::is_negative)
}

/// Basis of `{v : A v = 0}` by exact row reduction.
fn nullspace(a: &mut [Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[i][free];
            }
            v
        })
        .collect()
}

/// Smallest `b ≤ max_denom` and matching `a` with `x^b = base^a`, for
/// `0 < x, base < 1`.
pub fn rational_log(x: &Rational, base: &Rational, max_denom: i32) -> Option<Rational> {
    let t = crate::hp::to_f64(&crate::hp::log_ratio(x, base));
    for b in 1..=max_denom {
        let a = (t * f64::from(b)).round();
        if (t * f64::from(b) - a).abs() > 1e-6 {
            continue;
        }
        let a = a.to_i32()?;
        if a > 0 && x.pow(b) == base.pow(a) {
            return Some(Rational::new(i64::from(a), i64::from(b)));
        }
    }
    None
}
