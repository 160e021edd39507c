use std::fmt;

use serde::Serialize;

use super::QuotientGraph;
use crate::error::{Error, Result};
use crate::geometry::{BoxRegion, RatVec, Rational, Similarity};

/// Root path in the quotient graph, possibly with a periodic tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSpec {
    /// Edge indices from the root.
    pub prefix: Vec<usize>,
    /// Edge indices repeated forever after the prefix; empty for finite paths.
    pub cycle: Vec<usize>,
}

impl PathSpec {
    pub fn finite(prefix: Vec<usize>) -> Self {
        PathSpec {
            prefix,
            cycle: Vec::new(),
        }
    }

    pub fn is_periodic(&self) -> bool {
        !self.cycle.is_empty()
    }

    /// First `n` edges. Finite paths shorter than `n` are an error.
    pub fn unroll(&self, n: usize) -> Result<Vec<usize>> {
        if n <= self.prefix.len() {
            return Ok(self.prefix[..n].to_vec());
        }
        if self.cycle.is_empty() {
            return Err(Error::InvalidPath(format!(
                "path has {} edges, {n} requested",
                self.prefix.len()
            )));
        }
        let mut out = self.prefix.clone();
        out.extend(self.cycle.iter().cycle().take(n - self.prefix.len()));
        Ok(out)
    }

    /// Parses `A,1,1,5#2,(5,5)`: vertex labels from the root, `#k` picking
    /// the k-th parallel edge (1-based), and an optional parenthesized
    /// periodic tail that must return to its starting vertex.
    pub fn parse(g: &QuotientGraph, text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, tail) = match text.find('(') {
            Some(i) => {
                let rest = text[i + 1..].trim_end();
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidPath("unclosed '(' in path".into()))?;
                (
                    text[..i].trim_end().trim_end_matches(',').trim(),
                    Some(inner),
                )
            }
            None => (text, None),
        };
        let mut tokens = head.split(',').map(str::trim).filter(|t| !t.is_empty());
        let first = tokens
            .next()
            .ok_or_else(|| Error::InvalidPath("path is empty".into()))?;
        if g.vertex_by_label(first) != Some(QuotientGraph::ROOT) {
            return Err(Error::InvalidPath(format!(
                "path must start at the root '{}', not '{first}'",
                g.label(QuotientGraph::ROOT)
            )));
        }
        let mut at = QuotientGraph::ROOT;
        let prefix = follow(g, &mut at, tokens)?;
        let cycle = match tail {
            None => Vec::new(),
            Some(inner) => {
                let start = at;
                let c = follow(
                    g,
                    &mut at,
                    inner.split(',').map(str::trim).filter(|t| !t.is_empty()),
                )?;
                if c.is_empty() {
                    return Err(Error::InvalidPath("periodic tail is empty".into()));
                }
                if at != start {
                    return Err(Error::InvalidPath(format!(
                        "periodic tail ends at '{}' instead of '{}'",
                        g.label(at),
                        g.label(start)
                    )));
                }
                c
            }
        };
        Ok(PathSpec { prefix, cycle })
    }

    pub fn display<'a>(&'a self, g: &'a QuotientGraph) -> PathDisplay<'a> {
        PathDisplay { spec: self, g }
    }
}

fn follow<'a>(
    g: &QuotientGraph,
    at: &mut usize,
    tokens: impl Iterator<Item = &'a str>,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in tokens {
        let (label, k) = match tok.split_once('#') {
            Some((l, k)) => {
                let k: usize = k
                    .parse()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::InvalidPath(format!("bad edge index in '{tok}'")))?;
                (l, k)
            }
            None => (tok, 1),
        };
        let to = g
            .vertex_by_label(label)
            .ok_or_else(|| Error::InvalidPath(format!("unknown vertex '{label}'")))?;
        let parallel = g.edges_between(*at, to);
        let e = *parallel.get(k - 1).ok_or_else(|| {
            Error::InvalidPath(format!(
                "'{}' has {} edge(s) to '{label}', #{k} requested",
                g.label(*at),
                parallel.len()
            ))
        })?;
        out.push(e);
        *at = to;
    }
    Ok(out)
}

pub struct PathDisplay<'a> {
    spec: &'a PathSpec,
    g: &'a QuotientGraph,
}

/// `label` or `label#k` naming edge `e` among its parallels.
fn step_token(g: &QuotientGraph, e: usize) -> String {
    let edge = &g.edges[e];
    let k = g
        .edges_between(edge.from, edge.to)
        .iter()
        .position(|&x| x == e)
        .expect("edge is among its parallels");
    if k == 0 {
        g.label(edge.to).to_string()
    } else {
        format!("{}#{}", g.label(edge.to), k + 1)
    }
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.g.label(QuotientGraph::ROOT).to_string()];
        parts.extend(self.spec.prefix.iter().map(|&e| step_token(self.g, e)));
        if !self.spec.cycle.is_empty() {
            let tail: Vec<String> = self
                .spec
                .cycle
                .iter()
                .map(|&e| step_token(self.g, e))
                .collect();
            parts.push(format!("({})", tail.join(",")));
        }
        write!(f, "{}", parts.join(","))
    }
}

/// Checks that `path` starts at the root and is edge-consistent.
pub fn check_path(g: &QuotientGraph, path: &[usize]) -> Result<()> {
    let mut at = QuotientGraph::ROOT;
    for (i, &e) in path.iter().enumerate() {
        let edge = g
            .edges
            .get(e)
            .ok_or_else(|| Error::InvalidPath(format!("step {i}: no edge {e}")))?;
        if edge.from != at {
            return Err(Error::InvalidPath(format!(
                "step {i}: edge leaves '{}' but the path is at '{}'",
                g.label(edge.from),
                g.label(at)
            )));
        }
        at = edge.to;
    }
    Ok(())
}

fn require_weights(g: &QuotientGraph) -> Result<()> {
    if g.is_weighted() {
        Ok(())
    } else {
        Err(Error::InvalidMeasure(
            "graph was built without probabilities".into(),
        ))
    }
}

/// Row vectors `T_{0,1} ⋯ T_{k-1,k}` for `k = 0..=n`, starting from `[1]`.
pub fn row_products(g: &QuotientGraph, path: &[usize]) -> Result<Vec<Vec<Rational>>> {
    require_weights(g)?;
    check_path(g, path)?;
    let mut v = vec![Rational::one()];
    let mut out = vec![v.clone()];
    for &e in path {
        v = g.edges[e].matrix.left_mul(&v);
        out.push(v.clone());
    }
    Ok(out)
}

/// `P_k` for `k = 0..=path.len()`.
pub fn pn_sequence(g: &QuotientGraph, path: &[usize]) -> Result<Vec<Rational>> {
    Ok(row_products(g, path)?
        .into_iter()
        .map(|v| v.into_iter().sum())
        .collect())
}

/// Entry sum of the ordered matrix product along `path`.
pub fn pn_along(g: &QuotientGraph, path: &[usize]) -> Result<Rational> {
    Ok(pn_sequence(g, path)?.pop().expect("sequence includes P_0"))
}

/// Absolute normalization `T_Δ` of the net interval reached by `path`.
pub fn realize(g: &QuotientGraph, path: &[usize]) -> Result<Similarity> {
    check_path(g, path)?;
    let mut t = g.vertices()[QuotientGraph::ROOT].placement.clone();
    for &e in path {
        t = t.then_unchecked(&g.edges[e].rel);
    }
    Ok(t)
}

/// Absolute region of the net interval reached by `path`.
pub fn realized_region(g: &QuotientGraph, path: &[usize]) -> Result<BoxRegion> {
    let t = realize(g, path)?;
    let end = path.last().map_or(QuotientGraph::ROOT, |&e| g.edges[e].to);
    Ok(g.vertices()[end].key.region.transform(&t))
}

/// A point interior to one cell of `region`, off every cell boundary.
pub fn generic_point(region: &BoxRegion) -> Result<RatVec> {
    region
        .cells()
        .first()
        .map(|c| c.center())
        .ok_or(Error::EmptyRegion)
}

/// Every root path with exactly `n` edges, in lexicographic edge order.
pub fn enumerate_paths(g: &QuotientGraph, n: usize) -> Vec<Vec<usize>> {
    let mut paths = vec![(Vec::new(), QuotientGraph::ROOT)];
    for _ in 0..n {
        paths = paths
            .into_iter()
            .flat_map(|(p, at)| {
                g.out_edges(at)
                    .map(|e| {
                        let mut q = p.clone();
                        q.push(e);
                        (q, g.edges[e].to)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    paths.into_iter().map(|(p, _)| p).collect()
}

/// Whether two regions with disjoint interiors share a face patch.
pub fn regions_adjacent(a: &BoxRegion, b: &BoxRegion) -> bool {
    let (ca, cb) = (a.cells(), b.cells());
    let disjoint = ca.iter().all(|x| cb.iter().all(|y| !x.interiors_meet(y)));
    disjoint && ca.iter().any(|x| cb.iter().any(|y| x.shares_face(y)))
}

/// `c = max(c_0, 1/p_min)`, with `c_0` the largest ratio `P_1(x)/P_1(y)`
/// over adjacent level-one net intervals.
pub fn comparability_constant(g: &QuotientGraph) -> Result<Rational> {
    require_weights(g)?;
    let level1: Vec<(Rational, BoxRegion)> = enumerate_paths(g, 1)
        .into_iter()
        .map(|p| Ok((pn_along(g, &p)?, realized_region(g, &p)?)))
        .collect::<Result<_>>()?;
    let mut c0 = Rational::zero();
    for (i, (px, rx)) in level1.iter().enumerate() {
        for (py, ry) in &level1[i + 1..] {
            if regions_adjacent(rx, ry) {
                c0 = Rational::max_of(&c0, &(px / py));
                c0 = Rational::max_of(&c0, &(py / px));
            }
        }
    }
    let p_min = g
        .probs
        .as_ref()
        .and_then(|p| p.iter().min().cloned())
        .expect("weighted graphs carry probabilities");
    Ok(Rational::max_of(&c0, &p_min.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::ExploreOptions;
    use crate::measures::build_graph;
    use crate::testing::center_measure;

    fn graph() -> QuotientGraph {
        build_graph(&center_measure(), &ExploreOptions::default()).unwrap()
    }

    #[test]
    fn first_level_masses() {
        let g = graph();
        let spec = PathSpec::parse(&g, "A,1").unwrap();
        assert_eq!(pn_along(&g, &spec.prefix).unwrap(), Rational::new(1, 8));
        let spec = PathSpec::parse(&g, "A,5#2").unwrap();
        assert_eq!(pn_along(&g, &spec.prefix).unwrap(), Rational::new(5, 8));
    }

    #[test]
    fn two_step_product() {
        let g = graph();
        // [p5 p3] · [p5 p3; 0 p1] summed.
        let spec = PathSpec::parse(&g, "A,5#2,5").unwrap();
        let (p5, p3, p1) = (Rational::half(), Rational::new(1, 8), Rational::new(1, 8));
        let want = &(&p5 * &p5) + &(&(&p5 * &p3) + &(&p3 * &p1));
        assert_eq!(pn_along(&g, &spec.prefix).unwrap(), want);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = graph();
        for text in ["A,1,1", "A,5#2,(5#2)", "A,1,(1,2,1)", "A"] {
            let spec = PathSpec::parse(&g, text).unwrap();
            assert_eq!(spec.display(&g).to_string(), text);
        }
        assert!(PathSpec::parse(&g, "1,1").is_err());
        assert!(PathSpec::parse(&g, "A,7").is_err());
        assert!(PathSpec::parse(&g, "A,5,(7)").is_err());
        assert!(PathSpec::parse(&g, "A,5#3").is_err());
    }

    #[test]
    fn realized_regions_tile_level_one() {
        let g = graph();
        let total: Rational = enumerate_paths(&g, 1)
            .iter()
            .map(|p| realized_region(&g, p).unwrap().volume())
            .sum();
        assert_eq!(total, Rational::one());
    }

    #[test]
    fn comparability_constant_is_eight() {
        assert_eq!(
            comparability_constant(&graph()).unwrap(),
            Rational::integer(8)
        );
    }
}
