use serde::Serialize;

use crate::conditions::{FncReport, FncStatus};
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::ifs::{IfsSystem, Word};

/// Self-similar measure `μ = Σ p_i μ∘S_i^{-1}`.
#[derive(Clone, Debug)]
pub struct SelfSimilarMeasure {
    sys: IfsSystem,
    probs: Vec<Rational>,
}

/// Clause names used when a technical assumption fails.
pub mod clause {
    pub const FNC: &str = "FNC";
    pub const K_CUBE: &str = "K=cube";
    pub const EQUICONTRACTIVE: &str = "equicontractive";
    pub const BOUNDARY_PMIN: &str = "p_j=p_min";
    pub const SUM_ONE: &str = "Σp_i=1";
}

/// Outcome of each technical-assumption clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssumptionCheck {
    pub fnc: Option<bool>,
    pub k_is_cube: bool,
    pub equicontractive: bool,
    pub boundary_pmin: bool,
}

impl AssumptionCheck {
    pub fn first_failure(&self) -> Option<&'static str> {
        if self.fnc == Some(false) {
            Some(clause::FNC)
        } else if !self.k_is_cube {
            Some(clause::K_CUBE)
        } else if !self.equicontractive {
            Some(clause::EQUICONTRACTIVE)
        } else if !self.boundary_pmin {
            Some(clause::BOUNDARY_PMIN)
        } else {
            None
        }
    }
}

impl SelfSimilarMeasure {
    pub fn new(sys: IfsSystem, probs: Vec<Rational>) -> Result<Self> {
        if probs.len() != sys.len() {
            return Err(Error::InvalidMeasure(format!(
                "{} probabilities for {} maps",
                probs.len(),
                sys.len()
            )));
        }
        if let Some((i, p)) = probs.iter().enumerate().find(|(_, p)| !p.is_positive()) {
            return Err(Error::InvalidMeasure(format!(
                "p_{} = {p} is not positive",
                i + 1
            )));
        }
        let total: Rational = probs.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!(
                "{}: probabilities sum to {total}",
                clause::SUM_ONE
            )));
        }
        Ok(SelfSimilarMeasure { sys, probs })
    }

    /// Uniform weights `1/k`.
    pub fn uniform(sys: IfsSystem) -> Self {
        let k = Rational::new(1, sys.len() as i64);
        let probs = vec![k; sys.len()];
        SelfSimilarMeasure { sys, probs }
    }

    pub fn sys(&self) -> &IfsSystem {
        &self.sys
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn p(&self, i: usize) -> &Rational {
        &self.probs[i]
    }

    pub fn p_min(&self) -> Rational {
        self.probs.iter().min().cloned().expect("systems have maps")
    }

    /// `p_σ = p_{σ_1} ⋯ p_{σ_n}`.
    pub fn word_prob(&self, w: &Word) -> Rational {
        w.letters()
            .iter()
            .map(|&j| self.probs[j as usize].clone())
            .product()
    }

    /// Checks every clause; FNC is only judged when an exploration is given.
    pub fn assumptions(&self, fnc: Option<&FncReport>) -> AssumptionCheck {
        let p_min = self.p_min();
        AssumptionCheck {
            fnc: fnc.map(|r| r.status == FncStatus::FncDetected && r.k_exact),
            k_is_cube: self.sys.has_full_support(),
            equicontractive: self.sys.is_equicontractive(),
            boundary_pmin: self
                .sys
                .boundary_maps()
                .iter()
                .all(|&j| self.probs[j] == p_min),
        }
    }

    /// Fails with the first violated clause.
    pub fn require_assumptions(&self, fnc: Option<&FncReport>) -> Result<()> {
        match self.assumptions(fnc).first_failure() {
            Some(c) => Err(Error::TechnicalAssumption(c.into())),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{center_overlap, ratios};

    #[test]
    fn probabilities_must_sum_to_one() {
        let err = SelfSimilarMeasure::new(center_overlap(), ratios(&[(1, 5); 4])).unwrap_err();
        assert!(matches!(err, Error::InvalidMeasure(_)));
        let err = SelfSimilarMeasure::new(center_overlap(), ratios(&[(1, 4); 5])).unwrap_err();
        assert!(err.to_string().contains(clause::SUM_ONE));
    }

    #[test]
    fn boundary_maps_need_minimal_weight() {
        let ok = SelfSimilarMeasure::new(
            center_overlap(),
            ratios(&[(1, 8), (1, 8), (1, 8), (1, 8), (1, 2)]),
        )
        .unwrap();
        assert!(ok.require_assumptions(None).is_ok());
        let bad = SelfSimilarMeasure::new(
            center_overlap(),
            ratios(&[(1, 16), (1, 8), (3, 16), (1, 4), (3, 8)]),
        )
        .unwrap();
        assert_eq!(
            bad.require_assumptions(None),
            Err(Error::TechnicalAssumption(clause::BOUNDARY_PMIN.into()))
        );
    }

    #[test]
    fn word_probability_multiplies() {
        let mu = SelfSimilarMeasure::uniform(center_overlap());
        assert_eq!(
            mu.word_prob(&Word::from_labels(&[1, 5, 5])),
            Rational::new(1, 125)
        );
        assert_eq!(mu.word_prob(&Word::empty()), Rational::one());
    }
}
