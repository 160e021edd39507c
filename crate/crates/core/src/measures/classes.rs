use serde::Serialize;

use super::QuotientGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDecomposition {
    /// Strongly connected components, each sorted, listed by smallest vertex.
    pub sccs: Vec<Vec<usize>>,
    /// Indices into `sccs` of the maximal loop classes.
    pub loop_classes: Vec<usize>,
    /// Indices into `sccs` of loop classes no edge leaves.
    pub essential: Vec<usize>,
}

impl ClassDecomposition {
    pub fn essential_vertices(&self) -> Option<&[usize]> {
        match self.essential.as_slice() {
            [i] => Some(&self.sccs[*i]),
            _ => None,
        }
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.sccs
            .iter()
            .position(|c| c.contains(&v))
            .expect("components partition the vertices")
    }

    /// Vertices outside every loop class.
    pub fn transient(&self) -> Vec<usize> {
        let mut t: Vec<usize> = (0..self.sccs.len())
            .filter(|i| !self.loop_classes.contains(i))
            .flat_map(|i| self.sccs[i].iter().copied())
            .collect();
        t.sort_unstable();
        t
    }
}

/// Tarjan's algorithm, iterative to keep deep graphs off the call stack.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;
    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        let mut call = vec![(s, 0usize)];
        index[s] = next;
        low[s] = next;
        next += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*i) {
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(u, _)) = call.last() {
                low[u] = low[u].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("v is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out.sort();
    out
}

/// Components, loop classes and essential classes without asserting
/// uniqueness.
pub fn decompose(g: &QuotientGraph) -> ClassDecomposition {
    let adj = g.successors();
    let sccs = strongly_connected_components(&adj);
    let mut comp = vec![0; adj.len()];
    for (i, c) in sccs.iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    let loop_classes: Vec<usize> = (0..sccs.len())
        .filter(|&i| sccs[i].len() > 1 || adj[sccs[i][0]].contains(&sccs[i][0]))
        .collect();
    let essential = loop_classes
        .iter()
        .copied()
        .filter(|&i| {
            sccs[i]
                .iter()
                .all(|&v| adj[v].iter().all(|&w| comp[w] == i))
        })
        .collect();
    ClassDecomposition {
        sccs,
        loop_classes,
        essential,
    }
}

/// Decomposition with the essential class required to be unique, which
/// always holds under the technical assumptions.
pub fn class_decomposition(g: &QuotientGraph) -> Result<ClassDecomposition> {
    let d = decompose(g);
    if d.essential.len() != 1 {
        return Err(Error::InvariantViolation(format!(
            "expected one essential class, found {}",
            d.essential.len()
        )));
    }
    Ok(d)
}


#[cfg(test)]
mod graph_tests {
    use super::*;
    use crate::conditions::ExploreOptions;
    use crate::measures::{build_graph, build_graph_only};
    use crate::testing::{center_measure, corner_tiling, thirds_ninths};

    #[test]
    fn center_overlap_essential_class() {
        let g = build_graph(&center_measure(), &ExploreOptions::default()).unwrap();
        let c = class_decomposition(&g).unwrap();
        assert_eq!(c.essential_vertices(), Some(&[1, 2, 3, 4, 5, 6, 7, 8][..]));
        assert_eq!(c.transient(), vec![0]);
    }

    #[test]
    fn tiling_root_is_its_own_essential_class() {
        let g = build_graph_only(&corner_tiling(), &ExploreOptions::default()).unwrap();
        let c = class_decomposition(&g).unwrap();
        assert_eq!(c.essential_vertices(), Some(&[0][..]));
    }

    #[test]
    fn graph_only_build_has_unique_essential_class() {
        let g = build_graph_only(&thirds_ninths(), &ExploreOptions::default()).unwrap();
        assert!(class_decomposition(&g).is_ok());
    }
}
