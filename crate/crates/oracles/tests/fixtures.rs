//! Sanity of the fixtures and oracles on cases small enough to do by hand.

use fracnet::geometry::{RatVec, Rational};
use fracnet_oracles::{fixtures, lambda, pn};

#[test]
fn reference_edge_list_has_one_entry_per_parallel_edge() {
    assert_eq!(fixtures::CENTER_OVERLAP_REFERENCE.len(), 46);
    let from_root = fixtures::CENTER_OVERLAP_REFERENCE.iter().filter(|e| e.0 == "A").count();
    assert_eq!(from_root, 8);
}

#[test]
fn fixture_weights_are_distributions() {
    for probs in [
        fixtures::center_overlap_probs(),
        fixtures::center_overlap_asymmetric_probs(),
        fixtures::lebesgue().1,
    ] {
        assert_eq!(probs.iter().sum::<Rational>(), Rational::one());
    }
}

#[test]
fn lebesgue_mass_of_a_generic_point_halves_each_level() {
    let (sys, probs) = fixtures::lebesgue();
    let x = RatVec::from_pairs(&[(1, 3)]);
    for n in 0..8 {
        let want = Rational::half().pow(n as i32);
        assert_eq!(pn::pn_oracle(&sys, &probs, &x, n).unwrap(), want);
    }
}

#[test]
fn center_point_lies_in_every_first_level_square() {
    // (0, 0) lies in all five first-level squares.
    let (sys, probs) = fixtures::center_overlap_measure();
    let x = RatVec::from_pairs(&[(0, 1), (0, 1)]);
    assert_eq!(pn::pn_oracle(&sys, &probs, &x, 1).unwrap(), Rational::one());
}

#[test]
fn equal_ratios_give_full_levels() {
    let rs = vec![Rational::new(1, 3); 3];
    let words = lambda::lambda_naive(&rs, &Rational::new(1, 9));
    assert_eq!(words.len(), 9);
    assert!(words.iter().all(|w| w.len() == 2));
}
