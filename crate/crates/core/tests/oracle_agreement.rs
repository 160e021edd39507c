//! The engine against the brute-force oracles.

use fracnet::conditions::ExploreOptions;
use fracnet::geometry::{
    inscribed_cube, region_from_signature, AxisBox, BoxRegion, RatVec, Rational,
};
use fracnet::ifs::{lambda_alpha, IfsSystem};
use fracnet::measures::{
    build_graph, build_graph_unchecked, enumerate_paths, generic_point, pn_along, realized_region,
    strongly_connected_components, QuotientGraph, SelfSimilarMeasure,
};
use fracnet_oracles::{fixtures, inscribed, lambda, membership, pn, scc};
use proptest::prelude::*;

fn check_paths_against_oracle(
    g: &QuotientGraph,
    sys: &IfsSystem,
    probs: &[Rational],
    max_len: usize,
) -> usize {
    let mut checked = 0;
    for n in 1..=max_len {
        let paths = enumerate_paths(g, n);
        let points: Vec<RatVec> = paths
            .iter()
            .map(|p| generic_point(&realized_region(g, p).unwrap()).unwrap())
            .collect();
        let expected = pn::pn_oracle_many(sys, probs, &points, n).unwrap();
        for (p, want) in paths.iter().zip(&expected) {
            assert_eq!(&pn_along(g, p).unwrap(), want, "path {p:?}");
        }
        checked += paths.len();
    }
    checked
}

#[test]
fn matrix_products_match_brute_force_measure() {
    let (sys, probs) = fixtures::center_overlap_measure();
    let mu = SelfSimilarMeasure::new(sys.clone(), probs.clone()).unwrap();
    let g = build_graph(&mu, &ExploreOptions::default()).unwrap();
    assert!(check_paths_against_oracle(&g, &sys, &probs, 5) > 1000);

    let asym = fixtures::center_overlap_asymmetric_probs();
    let mu = SelfSimilarMeasure::new(sys.clone(), asym.clone()).unwrap();
    let g = build_graph_unchecked(&mu, &ExploreOptions::default()).unwrap();
    check_paths_against_oracle(&g, &sys, &asym, 5);
}

#[test]
fn lebesgue_products_are_uniform() {
    let (sys, probs) = fixtures::lebesgue();
    let mu = SelfSimilarMeasure::new(sys.clone(), probs.clone()).unwrap();
    let g = build_graph(&mu, &ExploreOptions::default()).unwrap();
    check_paths_against_oracle(&g, &sys, &probs, 6);
}

#[test]
fn lambda_matches_naive_listing() {
    let sys = fixtures::thirds_ninths();
    let ratios: Vec<Rational> = sys.maps().iter().map(|m| m.ratio().clone()).collect();
    for alpha in [(1, 1), (1, 2), (1, 9), (1, 20), (2, 81), (1, 243)] {
        let alpha = Rational::new(alpha.0, alpha.1);
        let got: Vec<Vec<u32>> = lambda_alpha(&sys, &alpha)
            .unwrap()
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(got, lambda::lambda_naive(&ratios, &alpha), "alpha {alpha}");
    }
}

fn grid_box(lo: (i64, i64), hi: (i64, i64)) -> AxisBox {
    AxisBox::new(
        RatVec::from_pairs(&[(lo.0, 4), (lo.1, 4)]),
        RatVec::from_pairs(&[(hi.0, 4), (hi.1, 4)]),
    )
    .unwrap()
}

fn boxes_strategy() -> impl Strategy<Value = Vec<AxisBox>> {
    prop::collection::vec(((-4i64..4, -4i64..4), (1i64..5, 1i64..5)), 1..5).prop_map(|v| {
        v.into_iter()
            .map(|((x, y), (w, h))| grid_box((x, y), ((x + w).min(4), (y + h).min(4))))
            .filter(|b| b.min_side().is_positive())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn components_match_transitive_closure(
        edges in prop::collection::vec((0usize..12, 0usize..12), 0..30)
    ) {
        let mut adj = vec![Vec::new(); 12];
        for (a, b) in edges {
            adj[a].push(b);
        }
        prop_assert_eq!(strongly_connected_components(&adj), scc::scc_naive(&adj));
    }

    #[test]
    fn inscribed_cube_matches_lattice_search(boxes in boxes_strategy()) {
        prop_assume!(!boxes.is_empty());
        let region = BoxRegion::from_boxes(2, &boxes).unwrap();
        let want = inscribed::inscribed_cube_naive(&boxes, &Rational::new(1, 4), 1 << 12).unwrap();
        prop_assert_eq!(inscribed_cube(&region).unwrap(), want);
    }

    #[test]
    fn signature_regions_match_pointwise_membership(
        inside in boxes_strategy(),
        outside in boxes_strategy(),
    ) {
        prop_assume!(!inside.is_empty());
        let region = region_from_signature(&inside, &outside).unwrap();
        // Probe centers of the 1/8 lattice: never on a box boundary.
        let probes: Vec<RatVec> = (-8..8)
            .flat_map(|i| (-8..8).map(move |j| RatVec::from_pairs(&[(2 * i + 1, 16), (2 * j + 1, 16)])))
            .collect();
        let want = membership::region_membership(&inside, &outside, &probes);
        for (x, w) in probes.iter().zip(want) {
            prop_assert_eq!(region.contains_point(x), w, "probe {}", x);
        }
    }
}
