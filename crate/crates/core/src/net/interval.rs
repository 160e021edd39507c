use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{inscribed_cube, BoxRegion, RatVec, Rational, Similarity};
use crate::ifs::Word;

/// A distinct map `S_σ` covering a net interval, with every word producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMap {
    pub map: Similarity,
    pub words: Vec<Word>,
}

/// Net interval at level `α` in absolute coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetInterval {
    pub level: Rational,
    pub region: BoxRegion,
    /// Distinct covering maps, ordered as similarities.
    pub cover: Vec<CoverMap>,
    /// `T_Δ(x) = m(Δ)·x + a`.
    pub norm: Similarity,
}

impl NetInterval {
    /// `m(Δ)`, the side of the largest inscribed cube.
    pub fn side(&self) -> &Rational {
        self.norm.ratio()
    }

    pub fn anchor(&self) -> &RatVec {
        self.norm.trans()
    }

    pub fn cover_words(&self) -> Vec<Word> {
        let mut w: Vec<Word> = self
            .cover
            .iter()
            .flat_map(|c| c.words.iter().cloned())
            .collect();
        w.sort();
        w
    }

    pub fn neighbor_set(&self) -> NeighborSet {
        neighbor_set(self)
    }

    /// Identity of the interval up to similarity: neighbor set, normalized
    /// region and normalized level.
    pub fn type_key(&self) -> TypeKey {
        let inv = self.norm.invert();
        TypeKey {
            neighbors: self.neighbor_set(),
            region: self.region.transform(&inv),
            level: &self.level / self.side(),
        }
    }
}

/// `T_Δ`: unit-cube placement onto the largest inscribed cube of `region`,
/// anchored at its lexicographically smallest corner.
pub fn normalization(region: &BoxRegion) -> Result<Similarity> {
    let (side, anchor) = inscribed_cube(region)?;
    Ok(Similarity::scaling(side, anchor))
}

/// `{T_Δ^{-1} ∘ S_σ : σ ∈ cover}`, deduplicated and sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NeighborSet(Vec<Similarity>);

impl NeighborSet {
    pub fn new(mut maps: Vec<Similarity>) -> Self {
        maps.sort();
        maps.dedup();
        NeighborSet(maps)
    }

    pub fn maps(&self) -> &[Similarity] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NeighborSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for NeighborSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn neighbor_set(n: &NetInterval) -> NeighborSet {
    let inv = n.norm.invert();
    NeighborSet::new(n.cover.iter().map(|c| inv.then_unchecked(&c.map)).collect())
}

/// Key under which net intervals are identified during exploration.
///
/// The neighbor set alone does not fix the shape of an interval: maps outside
/// the cover can carve different notches out of the same covering images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeKey {
    pub neighbors: NeighborSet,
    pub region: BoxRegion,
    pub level: Rational,
}
