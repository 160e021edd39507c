use std::collections::BTreeMap;

use serde::Serialize;

use super::{SelfSimilarMeasure, TransitionMatrix};
use crate::conditions::{explore_fnc, ExploreOptions, FncReport, FncStatus, TypeInfo};
use crate::error::{Error, Result};
use crate::geometry::{Rational, Similarity};
use crate::ifs::IfsSystem;

#[derive(Clone, Debug, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    /// Child normalization in the parent's normalized frame.
    pub rel: Similarity,
    pub matrix: TransitionMatrix,
}

/// Weighted directed multigraph on neighbor-set types. Vertex 0 is the cube.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientGraph {
    pub exploration: FncReport,
    pub edges: Vec<GraphEdge>,
    /// `None` for a graph-only build, whose entries are 0/1.
    pub probs: Option<Vec<Rational>>,
    /// Common contraction ratio, when the system is equicontractive.
    pub ratio: Option<Rational>,
}

impl QuotientGraph {
    pub const ROOT: usize = 0;

    pub fn vertex_count(&self) -> usize {
        self.exploration.types.len()
    }

    pub fn vertices(&self) -> &[TypeInfo] {
        &self.exploration.types
    }

    pub fn label(&self, v: usize) -> &str {
        self.exploration.label(v)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.exploration.type_by_label(label).map(|t| t.id)
    }

    pub fn is_weighted(&self) -> bool {
        self.probs.is_some()
    }

    /// Level ratio per edge.
    pub fn step(&self) -> &Rational {
        &self.exploration.step
    }

    /// Edge indices leaving `v`, in child order.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&i| self.edges[i].from == v)
    }

    /// Parallel edges `from → to`, in child order.
    pub fn edges_between(&self, from: usize, to: usize) -> Vec<usize> {
        self.out_edges(from)
            .filter(|&i| self.edges[i].to == to)
            .collect()
    }

    /// Edge multiset keyed by vertex labels.
    pub fn edge_multiset(&self) -> BTreeMap<(String, String), usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry((self.label(e.from).to_string(), self.label(e.to).to_string()))
                .or_insert(0) += 1;
        }
        m
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        adj
    }
}

fn assemble(sys: &IfsSystem, rep: FncReport, probs: Option<&[Rational]>) -> Result<QuotientGraph> {
    if rep.status == FncStatus::CapReached {
        return Err(Error::CapExceeded(format!(
            "no finite neighbor-type closure within {} levels and {} types",
            rep.levels_explored,
            rep.types.len()
        )));
    }
    let edges = rep
        .edges
        .iter()
        .map(|e| GraphEdge {
            from: e.from,
            to: e.to,
            rel: e.rel.clone(),
            matrix: TransitionMatrix::from_pattern(
                e.rows.clone(),
                e.cols.clone(),
                &e.pattern,
                probs,
            ),
        })
        .collect::<Vec<_>>();
    if let Some(e) = edges.iter().find(|e| !e.matrix.columns_covered()) {
        return Err(Error::InvariantViolation(format!(
            "edge {} -> {} has a column no parent map reaches",
            rep.label(e.from),
            rep.label(e.to)
        )));
    }
    Ok(QuotientGraph {
        exploration: rep,
        edges,
        probs: probs.map(<[Rational]>::to_vec),
        ratio: sys.common_ratio().cloned(),
    })
}

/// Weighted graph of a measure satisfying the technical assumptions.
pub fn build_graph(mu: &SelfSimilarMeasure, opts: &ExploreOptions) -> Result<QuotientGraph> {
    mu.require_assumptions(None)?;
    let rep = explore_fnc(mu.sys(), opts);
    if rep.status == FncStatus::FncDetected {
        mu.require_assumptions(Some(&rep))?;
    }
    assemble(mu.sys(), rep, Some(mu.probs()))
}

/// Weighted graph requiring only a finite closure. The matrix algebra is
/// valid for any weights; only the local-dimension theory needs the rest.
pub fn build_graph_unchecked(
    mu: &SelfSimilarMeasure,
    opts: &ExploreOptions,
) -> Result<QuotientGraph> {
    assemble(mu.sys(), explore_fnc(mu.sys(), opts), Some(mu.probs()))
}

/// Unweighted graph of the system alone.
pub fn build_graph_only(sys: &IfsSystem, opts: &ExploreOptions) -> Result<QuotientGraph> {
    assemble(sys, explore_fnc(sys, opts), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{center_measure, center_overlap, ratios, thirds_ninths};

    #[test]
    fn center_overlap_edge_multiset() {
        let g = build_graph(&center_measure(), &ExploreOptions::default()).unwrap();
        assert_eq!(g.vertex_count(), 9);
        let m = g.edge_multiset();
        let count = |a: &str, b: &str| m.get(&(a.to_string(), b.to_string())).copied().unwrap_or(0);
        assert_eq!(count("A", "5"), 2);
        assert_eq!(count("5", "5"), 2);
        assert_eq!(count("5", "7"), 1);
        assert_eq!(g.edges.len(), 46);
        let a5: Vec<String> = g
            .edges_between(0, 5)
            .iter()
            .map(|&e| g.edges[e].matrix.symbolic())
            .collect();
        assert_eq!(a5, ["[p1 p5]", "[p5 p3]"]);
    }

    #[test]
    fn refuses_boundary_weight_violation() {
        let mu = SelfSimilarMeasure::new(
            center_overlap(),
            ratios(&[(1, 16), (1, 8), (3, 16), (1, 4), (3, 8)]),
        )
        .unwrap();
        let err = build_graph(&mu, &ExploreOptions::default()).unwrap_err();
        assert_eq!(err, Error::TechnicalAssumption("p_j=p_min".into()));
        let g = build_graph_unchecked(&mu, &ExploreOptions::default()).unwrap();
        assert_eq!(g.vertex_count(), 9);
    }

    #[test]
    fn graph_only_build_for_unequal_ratios() {
        let g = build_graph_only(&thirds_ninths(), &ExploreOptions::default()).unwrap();
        assert!(!g.is_weighted());
        assert!(g.ratio.is_none());
        assert!(g.edges.iter().all(|e| e.matrix.columns_covered()));
    }

    #[test]
    fn cap_is_an_error() {
        let opts = ExploreOptions {
            max_types: 2,
            ..ExploreOptions::default()
        };
        let err = build_graph(&center_measure(), &opts).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }
}
