use std::collections::BTreeMap;

use serde::Serialize;

use super::pn::{check_path, pn_sequence, row_products, PathSpec};
use super::spectral::{growth_rate, rational_log, SpectralBound};
use super::{mat_mul, QuotientGraph};
use crate::error::{Error, Result};
use crate::geometry::{AxisBox, RatVec, Rational};
use crate::hp;

/// Significant digits in decimal renderings of logarithms.
pub const DECIMAL_DIGITS: usize = 30;

/// `log P_n / log r^n` at one depth, evaluated at [`hp::PRECISION_BITS`].
#[derive(Clone, Debug, Serialize)]
pub struct DimEstimate {
    pub n: usize,
    pub pn: Rational,
    pub value: f64,
    pub decimal: String,
}

/// Exact limit along an eventually periodic path.
#[derive(Clone, Debug, Serialize)]
pub struct CycleCertificate {
    pub period: usize,
    /// Product of the cycle's transition matrices.
    pub cycle_matrix: Vec<Vec<Rational>>,
    /// Growth rate of the prefix row vector under the cycle matrix.
    pub radius: SpectralBound,
    pub dimension: f64,
    pub decimal: String,
    pub dimension_lower: f64,
    pub dimension_upper: f64,
    /// Set when the dimension is a certified rational.
    pub exact: Option<Rational>,
}

/// Several children contained the tracked point; the smallest anchor won.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryChoice {
    pub level: usize,
    pub candidates: Vec<String>,
    pub chosen: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimReport {
    pub path: String,
    pub estimates: Vec<DimEstimate>,
    pub certificate: Option<CycleCertificate>,
    /// Range of the estimates over the second half of the depths.
    pub estimate_lower: f64,
    pub estimate_upper: f64,
    pub boundary_choices: Vec<BoundaryChoice>,
    pub warnings: Vec<String>,
}

impl DimReport {
    pub fn estimate_at(&self, n: usize) -> Option<&DimEstimate> {
        self.estimates.iter().find(|e| e.n == n)
    }
}

fn log_ratio(x: &Rational, base: &Rational) -> (f64, String) {
    let v = hp::log_ratio(x, base);
    (hp::to_f64(&v), hp::to_decimal_string(&v, DECIMAL_DIGITS))
}

fn common_ratio(g: &QuotientGraph) -> Result<&Rational> {
    if !g.is_weighted() {
        return Err(Error::InvalidMeasure(
            "graph was built without probabilities".into(),
        ));
    }
    g.ratio.as_ref().ok_or(Error::NotEquicontractive)
}

/// Local dimension along a path given symbolically.
pub fn local_dimension(g: &QuotientGraph, spec: &PathSpec, depth: usize) -> Result<DimReport> {
    let r = common_ratio(g)?.clone();
    let mut warnings = Vec::new();
    let n = if spec.is_periodic() {
        depth
    } else if depth > spec.prefix.len() {
        warnings.push(format!(
            "finite path has {} edges; depth capped there",
            spec.prefix.len()
        ));
        spec.prefix.len()
    } else {
        depth
    };
    let path = spec.unroll(n)?;
    if spec.is_periodic() {
        check_path(g, &spec.unroll(spec.prefix.len() + spec.cycle.len())?)?;
    }
    let pns = pn_sequence(g, &path)?;
    let estimates: Vec<DimEstimate> = pns
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, p)| {
            let (value, decimal) = log_ratio(p, &r.pow(k as i32));
            DimEstimate {
                n: k,
                pn: p.clone(),
                value,
                decimal,
            }
        })
        .collect();
    let tail = &estimates[estimates.len() / 2..];
    let estimate_lower = tail.iter().map(|e| e.value).fold(f64::INFINITY, f64::min);
    let estimate_upper = tail
        .iter()
        .map(|e| e.value)
        .fold(f64::NEG_INFINITY, f64::max);

    let certificate = if !spec.is_periodic() {
        warnings.push("path is not eventually periodic; estimates only".into());
        None
    } else if depth < spec.prefix.len() + spec.cycle.len() {
        warnings.push(format!(
            "depth {depth} does not reach one full period (needs {}); estimates only",
            spec.prefix.len() + spec.cycle.len()
        ));
        None
    } else {
        Some(certify(g, spec, &r)?)
    };
    Ok(DimReport {
        path: spec.display(g).to_string(),
        estimates,
        certificate,
        estimate_lower,
        estimate_upper,
        boundary_choices: Vec::new(),
        warnings,
    })
}

fn certify(g: &QuotientGraph, spec: &PathSpec, r: &Rational) -> Result<CycleCertificate> {
    let u = row_products(g, &spec.prefix)?
        .pop()
        .expect("includes the start vector");
    let mut m: Option<Vec<Vec<Rational>>> = None;
    for &e in &spec.cycle {
        let t = &g.edges[e].matrix.entries;
        m = Some(match m {
            None => t.clone(),
            Some(acc) => mat_mul(&acc, t),
        });
    }
    let m = m.expect("cycle is nonempty");
    let start: Vec<bool> = u.iter().map(|x| !x.is_zero()).collect();
    let radius = growth_rate(&m, &start);
    let period = spec.cycle.len();
    let rp = r.pow(period as i32);
    if !radius.lower.is_positive() {
        return Err(Error::InvariantViolation(
            "cycle has zero growth rate".into(),
        ));
    }
    let (lo, _) = log_ratio(&radius.upper, &rp);
    let (hi, _) = log_ratio(&radius.lower, &rp);
    let (dimension, decimal, exact) = match &radius.exact {
        Some(rho) => {
            let (v, s) = log_ratio(rho, &rp);
            let q = rational_log(rho, r, 64).map(|q| q / Rational::integer(period as i64));
            (v, s, q)
        }
        None => {
            let (v, s) = log_ratio(&((&radius.lower + &radius.upper) * Rational::half()), &rp);
            (v, s, None)
        }
    };
    Ok(CycleCertificate {
        period,
        cycle_matrix: m,
        radius,
        dimension,
        decimal,
        dimension_lower: lo,
        dimension_upper: hi,
        exact,
    })
}

/// Net-interval chain of a point, following the child with the smallest
/// anchor whenever several contain it.
#[derive(Clone, Debug)]
pub struct TrackedPoint {
    pub spec: PathSpec,
    pub boundary_choices: Vec<BoundaryChoice>,
}

pub fn track_point(g: &QuotientGraph, x: &RatVec, depth: usize) -> Result<TrackedPoint> {
    let d = g.vertices()[QuotientGraph::ROOT].key.region.dim();
    if x.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.dim(),
        });
    }
    if !AxisBox::unit_cube(d).contains_point(x) {
        return Err(Error::InvalidPath(format!(
            "point {x} lies outside the cube"
        )));
    }
    let mut y = g.vertices()[QuotientGraph::ROOT]
        .placement
        .invert()
        .apply(x);
    let mut at = QuotientGraph::ROOT;
    let mut seen: BTreeMap<(usize, RatVec), usize> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut choices = Vec::new();
    for level in 0..depth {
        if let Some(&i) = seen.get(&(at, y.clone())) {
            let cycle = edges.split_off(i);
            return Ok(TrackedPoint {
                spec: PathSpec {
                    prefix: edges,
                    cycle,
                },
                boundary_choices: choices,
            });
        }
        seen.insert((at, y.clone()), level);
        let mut hits: Vec<usize> = g
            .out_edges(at)
            .filter(|&e| {
                let edge = &g.edges[e];
                g.vertices()[edge.to]
                    .key
                    .region
                    .transform(&edge.rel)
                    .contains_point(&y)
            })
            .collect();
        hits.sort_by(|&a, &b| {
            g.edges[a]
                .rel
                .trans()
                .cmp(g.edges[b].rel.trans())
                .then(a.cmp(&b))
        });
        let Some(&e) = hits.first() else {
            return Err(Error::InvariantViolation(format!(
                "no child of '{}' contains the tracked point",
                g.label(at)
            )));
        };
        if hits.len() > 1 {
            let name = |e: usize| {
                let edge = &g.edges[e];
                format!("{}@{}", g.label(edge.to), edge.rel.trans())
            };
            choices.push(BoundaryChoice {
                level: level + 1,
                candidates: hits.iter().map(|&h| name(h)).collect(),
                chosen: name(e),
            });
        }
        y = g.edges[e].rel.invert().apply(&y);
        at = g.edges[e].to;
        edges.push(e);
    }
    Ok(TrackedPoint {
        spec: PathSpec::finite(edges),
        boundary_choices: choices,
    })
}

/// Local dimension at a point, certified when its chain turns periodic
/// within `depth` levels.
pub fn local_dimension_at(g: &QuotientGraph, x: &RatVec, depth: usize) -> Result<DimReport> {
    common_ratio(g)?;
    let tracked = track_point(g, x, depth)?;
    let periodic = tracked.spec.is_periodic();
    let mut report = local_dimension(g, &tracked.spec, depth)?;
    if !periodic {
        report.warnings.retain(|w| !w.starts_with("path is not"));
        report.warnings.push(format!(
            "no repeated state within depth {depth}; estimates only"
        ));
    }
    if !tracked.boundary_choices.is_empty() {
        report.warnings.push(format!(
            "point lies on net-interval boundaries at {} level(s); smallest anchor followed",
            tracked.boundary_choices.len()
        ));
    }
    report.boundary_choices = tracked.boundary_choices;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::ExploreOptions;
    use crate::measures::build_graph;
    use crate::testing::{center_measure, lebesgue};

    #[test]
    fn corner_path_has_dimension_three() {
        let g = build_graph(&center_measure(), &ExploreOptions::default()).unwrap();
        let spec = PathSpec::parse(&g, "A,1,(1)").unwrap();
        let r = local_dimension(&g, &spec, 8).unwrap();
        let c = r.certificate.unwrap();
        assert_eq!(c.exact, Some(Rational::integer(3)));
        assert!(r.estimates.iter().all(|e| e.value == 3.0));
    }

    #[test]
    fn corner_point_is_tracked_to_the_same_cycle() {
        let g = build_graph(&center_measure(), &ExploreOptions::default()).unwrap();
        let x = RatVec::from_pairs(&[(-1, 2), (1, 2)]);
        let r = local_dimension_at(&g, &x, 10).unwrap();
        assert_eq!(r.path, "A,1,(1)");
    }

    #[test]
    fn lebesgue_points_have_dimension_one() {
        let g = build_graph(&lebesgue(), &ExploreOptions::default()).unwrap();
        for (a, b) in [(1, 3), (-2, 7), (1, 10), (0, 1)] {
            let r = local_dimension_at(&g, &RatVec::from_pairs(&[(a, b)]), 20).unwrap();
            assert_eq!(r.certificate.unwrap().exact, Some(Rational::one()));
        }
    }

    #[test]
    fn shallow_depth_gives_estimates_only() {
        let g = build_graph(&center_measure(), &ExploreOptions::default()).unwrap();
        let spec = PathSpec::parse(&g, "A,1,(1,1)").unwrap();
        let r = local_dimension(&g, &spec, 2).unwrap();
        assert!(r.certificate.is_none());
        assert_eq!(r.estimates.len(), 2);
        assert!(r.warnings.iter().any(|w| w.contains("full period")));
    }
}
