use serde::Serialize;

use crate::error::Result;
use crate::geometry::Rational;
use crate::ifs::IfsSystem;
use crate::net::net_intervals_at;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WscRow {
    pub alpha: Rational,
    pub intervals: usize,
    pub max_neighbors: usize,
    pub running_max: usize,
}

/// Largest neighbor-set size seen over the given levels.
///
/// This is a lower bound on `sup #V(Δ)`; it certifies the weak separation
/// condition only together with a closed FNC exploration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WscBound {
    pub max_neighbors: usize,
    pub per_level: Vec<WscRow>,
    pub k_exact: bool,
}

pub fn wsc_bound(sys: &IfsSystem, levels: &[Rational], k_depth: usize) -> Result<WscBound> {
    let mut per_level = Vec::with_capacity(levels.len());
    let mut running = 0;
    let mut k_exact = true;
    for alpha in levels {
        let net = net_intervals_at(sys, alpha, k_depth)?;
        k_exact &= net.k_exact;
        let m = net
            .intervals
            .iter()
            .map(|n| n.neighbor_set().len())
            .max()
            .unwrap_or(0);
        running = running.max(m);
        per_level.push(WscRow {
            alpha: alpha.clone(),
            intervals: net.intervals.len(),
            max_neighbors: m,
            running_max: running,
        });
    }
    Ok(WscBound {
        max_neighbors: running,
        per_level,
        k_exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{center_overlap, corner_tiling};

    #[test]
    fn neighbor_counts_stay_bounded() {
        let levels: Vec<Rational> = (1..=4).map(|j| Rational::half().pow(j)).collect();
        assert_eq!(
            wsc_bound(&corner_tiling(), &levels, 2)
                .unwrap()
                .max_neighbors,
            1
        );
        let w = wsc_bound(&center_overlap(), &levels, 2).unwrap();
        assert_eq!(w.max_neighbors, 2);
        assert!(w
            .per_level
            .windows(2)
            .all(|p| p[0].running_max <= p[1].running_max));
    }
}
