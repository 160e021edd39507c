use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::exec::Execution;
use crate::geometry::{AxisBox, BoxRegion, Rational, Similarity};
use crate::ifs::{IfsSystem, Word};
use crate::net::{normalization, subdivide, NeighborSet, TypeKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FncStatus {
    #[serde(rename = "FNC_detected")]
    FncDetected,
    #[serde(rename = "cap_reached")]
    CapReached,
}

/// One neighbor-set type. Geometry is stored in the type's own normalized
/// frame, where the largest inscribed cube is `[0, 1]^d`.
#[derive(Clone, Debug, Serialize)]
pub struct TypeInfo {
    pub id: usize,
    pub label: String,
    pub key: TypeKey,
    /// BFS depth of the first occurrence.
    pub depth: usize,
    /// Absolute `T_Δ` of the first occurrence.
    pub placement: Similarity,
    pub expanded: bool,
}

impl TypeInfo {
    pub fn neighbors(&self) -> &NeighborSet {
        &self.key.neighbors
    }

    /// Neighbor maps in transition-matrix order.
    pub fn ordered_neighbors(&self) -> Vec<Similarity> {
        let mut v = self.key.neighbors.maps().to_vec();
        v.sort_by(matrix_order);
        v
    }
}

/// Parent-to-child occurrence.
#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Child normalization expressed in the parent's normalized frame.
    pub rel: Similarity,
    /// Parent neighbor maps, in matrix row order.
    pub rows: Vec<Similarity>,
    /// Child neighbor maps in the child frame, in matrix column order.
    pub cols: Vec<Similarity>,
    /// Entry `(i, k)`: every `ω` with `rel^{-1} ∘ rows[i] ∘ S_ω = cols[k]`.
    pub pattern: Vec<Vec<Vec<Word>>>,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FncReport {
    pub status: FncStatus,
    pub step: Rational,
    pub step_exact: bool,
    pub k_exact: bool,
    pub types: Vec<TypeInfo>,
    pub edges: Vec<Edge>,
    /// `step^(d+1)` for the deepest first occurrence `d`, when closed.
    pub closure_level: Option<Rational>,
    pub levels_explored: usize,
}

impl FncReport {
    pub fn label(&self, id: usize) -> &str {
        &self.types[id].label
    }

    pub fn type_by_label(&self, label: &str) -> Option<&TypeInfo> {
        self.types.iter().find(|t| t.label == label)
    }

    pub fn out_edges(&self, id: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == id)
    }

    pub fn max_neighbors(&self) -> usize {
        self.types
            .iter()
            .map(|t| t.key.neighbors.len())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct ExploreOptions {
    pub max_levels: usize,
    pub max_types: usize,
    pub k_depth: usize,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions {
            max_levels: 12,
            max_types: 500,
            k_depth: 4,
        }
    }
}

/// Row and column order of transition matrices: lexicographic in `S(0)`,
/// then ratio and rotation.
pub fn matrix_order(a: &Similarity, b: &Similarity) -> Ordering {
    a.trans()
        .cmp(b.trans())
        .then_with(|| a.ratio().cmp(b.ratio()))
        .then_with(|| a.rot().cmp(b.rot()))
}

struct ChildOccurrence {
    key: TypeKey,
    rel: Similarity,
    cols: Vec<Similarity>,
    pattern: Vec<Vec<Vec<Word>>>,
    contained: bool,
    sort_key: (usize, Vec<(usize, Word)>),
}

fn expand(
    sys: &IfsSystem,
    t: &TypeInfo,
    step: &Rational,
    k_cover: Option<&BoxRegion>,
) -> Vec<ChildOccurrence> {
    let rows = t.ordered_neighbors();
    let region = &t.key.region;
    let child_level = &t.key.level * step;
    let (child_maps, pieces) = subdivide(sys, &rows, region, &child_level, Execution::Sequential);
    let k_local = k_cover.map(|k| k.transform(&t.placement.invert()));
    let mut out = Vec::new();
    for p in pieces {
        if let Some(k) = &k_local {
            if p.region.intersect(k).map(|r| r.is_empty()).unwrap_or(true) {
                continue;
            }
        }
        let rel = normalization(&p.region).expect("pieces are nonempty");
        let rel_inv = rel.invert();
        let mut cols: Vec<(Similarity, usize)> = p
            .cover
            .iter()
            .map(|&c| (rel_inv.then_unchecked(&child_maps[c].map), c))
            .collect();
        cols.sort_by(|a, b| matrix_order(&a.0, &b.0));
        let mut pattern = vec![vec![Vec::new(); cols.len()]; rows.len()];
        let mut origins = Vec::new();
        for (k, (_, c)) in cols.iter().enumerate() {
            for (row, w) in &child_maps[*c].origins {
                pattern[*row][k].push(w.clone());
                origins.push((*row, w.clone()));
            }
        }
        origins.sort();
        let contained = region.contains_region(&p.region);
        let key = TypeKey {
            neighbors: NeighborSet::new(cols.iter().map(|c| c.0.clone()).collect()),
            region: p.region.transform(&rel_inv),
            level: &child_level / rel.ratio(),
        };
        out.push(ChildOccurrence {
            key,
            rel,
            cols: cols.into_iter().map(|c| c.0).collect(),
            pattern,
            contained,
            sort_key: (p.cover.len(), origins),
        });
    }
    out.sort_by(|a, b| a.sort_key.cmp(&b.sort_key));
    out
}

/// Breadth-first search over neighbor-set types starting from the cube.
///
/// Reports `FNC_detected` when every child of every discovered type is itself
/// discovered. Hitting `max_types` or `max_levels` yields `cap_reached` with
/// the partial graph; a negative answer is never claimed.
pub fn explore_fnc(sys: &IfsSystem, opts: &ExploreOptions) -> FncReport {
    explore_fnc_with(sys, opts, Execution::auto())
}

pub fn explore_fnc_with(sys: &IfsSystem, opts: &ExploreOptions, exec: Execution) -> FncReport {
    let (step, step_exact) = sys.level_step();
    let step = step.clone();
    let d = sys.dim();
    let cube = BoxRegion::from_box(&AxisBox::unit_cube(d));
    let root_norm = normalization(&cube).expect("cube is nonempty");
    let root_key = TypeKey {
        neighbors: NeighborSet::new(vec![root_norm.invert()]),
        region: cube.transform(&root_norm.invert()),
        level: Rational::one(),
    };
    let mut types = vec![TypeInfo {
        id: 0,
        label: "A".into(),
        key: root_key.clone(),
        depth: 0,
        placement: root_norm,
        expanded: false,
    }];
    let mut index: BTreeMap<TypeKey, usize> = BTreeMap::new();
    index.insert(root_key, 0);
    let mut edges = Vec::new();
    let k_cover = (!sys.has_full_support()).then(|| sys.cover_region(opts.k_depth));
    let mut capped = false;
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        if depth >= opts.max_levels {
            capped = true;
            break;
        }
        let expansions = exec.map(&frontier, |&id| {
            expand(sys, &types[id], &step, k_cover.as_ref())
        });
        let mut next = Vec::new();
        for (&id, kids) in frontier.iter().zip(expansions) {
            types[id].expanded = true;
            let rows = types[id].ordered_neighbors();
            for kid in kids {
                let to = match index.get(&kid.key) {
                    Some(&t) => t,
                    None => {
                        if types.len() >= opts.max_types {
                            capped = true;
                            continue;
                        }
                        let t = types.len();
                        let placement = types[id].placement.then_unchecked(&kid.rel);
                        types.push(TypeInfo {
                            id: t,
                            label: t.to_string(),
                            key: kid.key.clone(),
                            depth: depth + 1,
                            placement,
                            expanded: false,
                        });
                        index.insert(kid.key, t);
                        next.push(t);
                        t
                    }
                };
                edges.push(Edge {
                    from: id,
                    to,
                    rel: kid.rel,
                    rows: rows.clone(),
                    cols: kid.cols,
                    pattern: kid.pattern,
                    contained: kid.contained,
                });
            }
        }
        frontier = next;
        depth += 1;
    }
    let status = if capped {
        FncStatus::CapReached
    } else {
        FncStatus::FncDetected
    };
    let max_depth = types.iter().map(|t| t.depth).max().unwrap_or(0);
    let closure_level = (status == FncStatus::FncDetected).then(|| step.pow(max_depth as i32 + 1));
    FncReport {
        status,
        step,
        step_exact,
        k_exact: k_cover.is_none(),
        types,
        edges,
        closure_level,
        levels_explored: depth,
    }
}
