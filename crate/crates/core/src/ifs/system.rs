use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{AxisBox, BoxRegion, RatVec, Rational, SignedPermutation, Similarity};

use super::Word;

/// Iterated function system of contracting similarities acting on the
/// reference cube `[-1/2, 1/2]^d`.
///
/// Structural flags are computed once when the system is built.
#[derive(Clone, Debug)]
pub struct IfsSystem {
    dim: usize,
    maps: Vec<Similarity>,
    flags: Flags,
}

#[derive(Clone, Debug)]
struct Flags {
    non_invariant: Vec<usize>,
    full_support: bool,
    equicontractive: bool,
    hull_is_cube: bool,
    boundary_maps: Vec<usize>,
    step: Rational,
    step_exact: bool,
}

/// Largest `ρ` with both inputs integer powers of `ρ`, if one is found within
/// a bounded number of reduction steps.
fn multiplicative_gcd(a: &Rational, b: &Rational) -> Option<Rational> {
    let (mut x, mut y) = (a.clone(), b.clone());
    for _ in 0..64 {
        if x == y {
            return Some(x);
        }
        if x < y {
            std::mem::swap(&mut x, &mut y);
        }
        y = &y / &x;
        // Operands grow quickly when the logarithms are incommensurable.
        if y.denom().bits() > 1024 {
            return None;
        }
    }
    None
}

impl IfsSystem {
    pub fn new(maps: Vec<Similarity>) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::InvalidRatio(
                "a system needs at least one map".into(),
            ));
        };
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        for (i, m) in maps.iter().enumerate() {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            if !(m.ratio().is_positive() && m.ratio() < &Rational::one()) {
                return Err(Error::InvalidRatio(format!(
                    "map {} has ratio {}, expected a value in (0, 1)",
                    i + 1,
                    m.ratio()
                )));
            }
        }
        let flags = Flags::compute(dim, &maps);
        Ok(IfsSystem { dim, maps, flags })
    }

    /// Maps `x ↦ ratio·x + t` with identity rotation.
    pub fn from_scalings(dim: usize, parts: &[(Rational, RatVec)]) -> Result<Self> {
        let maps = parts
            .iter()
            .map(|(r, t)| Similarity::new(r.clone(), SignedPermutation::identity(dim), t.clone()))
            .collect::<Result<Vec<_>>>()?;
        IfsSystem::new(maps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maps(&self) -> &[Similarity] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn ratio(&self, i: usize) -> &Rational {
        self.maps[i].ratio()
    }

    pub fn r_min(&self) -> Rational {
        self.maps
            .iter()
            .map(|m| m.ratio().clone())
            .min()
            .expect("nonempty")
    }

    pub fn r_max(&self) -> Rational {
        self.maps
            .iter()
            .map(|m| m.ratio().clone())
            .max()
            .expect("nonempty")
    }

    pub fn word_ratio(&self, w: &Word) -> Rational {
        w.letters()
            .iter()
            .map(|&l| self.maps[l as usize].ratio())
            .product()
    }

    /// `S_σ = S_{σ_1} ∘ ⋯ ∘ S_{σ_n}`; the empty word gives the identity.
    pub fn word_map(&self, w: &Word) -> Similarity {
        w.letters()
            .iter()
            .fold(Similarity::identity(self.dim), |acc, &l| {
                acc.then_unchecked(&self.maps[l as usize])
            })
    }

    pub fn is_equicontractive(&self) -> bool {
        self.flags.equicontractive
    }

    /// The shared ratio of an equicontractive system.
    pub fn common_ratio(&self) -> Option<&Rational> {
        self.flags.equicontractive.then(|| self.maps[0].ratio())
    }

    /// `∪ S_i(cube)` equals the cube, so the attractor is the cube.
    pub fn has_full_support(&self) -> bool {
        self.flags.full_support
    }

    pub fn is_invariant(&self) -> bool {
        self.flags.non_invariant.is_empty()
    }

    pub(crate) fn non_invariant_maps(&self) -> &[usize] {
        &self.flags.non_invariant
    }

    pub fn hull_is_cube(&self) -> bool {
        self.flags.hull_is_cube
    }

    /// 0-based indices of maps whose image meets the cube boundary.
    pub fn boundary_maps(&self) -> &[usize] {
        &self.flags.boundary_maps
    }

    /// Generation step `ρ` used to walk levels `1, ρ, ρ², …`: the common
    /// ratio, or the largest common multiplicative base of all ratios.
    /// Falls back to `r_max` (flagged inexact) for incommensurable ratios.
    pub fn level_step(&self) -> (&Rational, bool) {
        (&self.flags.step, self.flags.step_exact)
    }

    /// `∪_{|ω|=depth} S_ω(cube)`.
    pub fn cover_region(&self, depth: usize) -> BoxRegion {
        let mut words = vec![Similarity::identity(self.dim)];
        for _ in 0..depth {
            let mut next: BTreeSet<Similarity> = BTreeSet::new();
            for w in &words {
                for m in &self.maps {
                    next.insert(w.then_unchecked(m));
                }
            }
            words = next.into_iter().collect();
        }
        let boxes: Vec<AxisBox> = words.iter().map(Similarity::image_of_cube).collect();
        BoxRegion::from_boxes(self.dim, &boxes).expect("dimensions agree")
    }
}

impl Flags {
    fn compute(dim: usize, maps: &[Similarity]) -> Flags {
        let cube = AxisBox::unit_cube(dim);
        let images: Vec<AxisBox> = maps.iter().map(Similarity::image_of_cube).collect();
        let non_invariant = images
            .iter()
            .enumerate()
            .filter(|(_, b)| !cube.contains_box(b))
            .map(|(i, _)| i)
            .collect();
        let union = BoxRegion::from_boxes(dim, &images).expect("dimensions agree");
        let full_support = union == BoxRegion::from_box(&cube);
        let equicontractive = maps.iter().all(|m| m.ratio() == maps[0].ratio());
        let boundary_maps = images
            .iter()
            .enumerate()
            .filter(|(_, b)| b.touches_unit_boundary())
            .map(|(i, _)| i)
            .collect();
        let hull_is_cube = corners_in_attractor(dim, maps);
        let (step, step_exact) = if equicontractive {
            (maps[0].ratio().clone(), true)
        } else {
            let mut acc = Some(maps[0].ratio().clone());
            for m in &maps[1..] {
                acc = acc.and_then(|g| multiplicative_gcd(&g, m.ratio()));
            }
            match acc {
                Some(g) => (g, true),
                None => (
                    maps.iter()
                        .map(|m| m.ratio().clone())
                        .max()
                        .expect("nonempty"),
                    false,
                ),
            }
        };
        Flags {
            non_invariant,
            full_support,
            equicontractive,
            hull_is_cube,
            boundary_maps,
            step,
            step_exact,
        }
    }
}

/// Whether every corner of the cube lies in the attractor.
///
/// A corner `c` of the cube can only lie in `S_i(cube)` as a corner of that
/// image, so `c ∈ K` iff some chain of corner preimages never ends. This is
/// the greatest fixed point of the preimage relation on the `2^d` corners.
/// When all corners are in `K`, the closed convex hull of `K` is the cube.
fn corners_in_attractor(dim: usize, maps: &[Similarity]) -> bool {
    let half = Rational::half();
    let corners: Vec<RatVec> = (0..1usize << dim)
        .map(|mask| {
            RatVec(
                (0..dim)
                    .map(|k| {
                        if mask >> k & 1 == 1 {
                            half.clone()
                        } else {
                            -&half
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let inverses: Vec<Similarity> = maps.iter().map(Similarity::invert).collect();
    let index_of = |p: &RatVec| corners.iter().position(|c| c == p);
    let succ: Vec<Vec<usize>> = corners
        .iter()
        .map(|c| {
            inverses
                .iter()
                .filter_map(|inv| index_of(&inv.apply(c)))
                .collect()
        })
        .collect();
    let mut alive = vec![true; corners.len()];
    loop {
        let mut changed = false;
        for i in 0..corners.len() {
            if alive[i] && !succ[i].iter().any(|&j| alive[j]) {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    alive.iter().all(|&a| a)
}
