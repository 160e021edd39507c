use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{Rational, Similarity};

use super::{IfsSystem, Word};

/// `Λ_α`: words with `r_σ ≤ α < r_{σ^-}`, taking `r_{ε^-} = ∞`.
///
/// With this convention `α = 1` yields `{ε}` and, for a common ratio `r`,
/// `α = r^n` yields exactly the words of length `n`.
pub fn lambda_alpha(sys: &IfsSystem, alpha: &Rational) -> Result<Vec<Word>> {
    lambda_alpha_with(sys, alpha, Execution::auto())
}

pub fn lambda_alpha_with(sys: &IfsSystem, alpha: &Rational, exec: Execution) -> Result<Vec<Word>> {
    Ok(generation_with(sys, alpha, exec)?
        .into_iter()
        .map(|(w, _)| w)
        .collect())
}

/// `Λ_α` together with the maps `S_σ`, sorted by word.
pub fn generation(sys: &IfsSystem, alpha: &Rational) -> Result<Vec<(Word, Similarity)>> {
    generation_with(sys, alpha, Execution::auto())
}

pub fn generation_with(
    sys: &IfsSystem,
    alpha: &Rational,
    exec: Execution,
) -> Result<Vec<(Word, Similarity)>> {
    if !alpha.is_positive() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    let root = (
        Word::empty(),
        Similarity::identity(sys.dim()),
        Rational::one(),
    );
    if &root.2 <= alpha {
        return Ok(vec![(root.0, root.1)]);
    }
    let firsts: Vec<_> = (0..sys.len() as u32)
        .map(|i| {
            let m = &sys.maps()[i as usize];
            (Word::from_letters(vec![i]), m.clone(), m.ratio().clone())
        })
        .collect();
    let parts = exec.map(&firsts, |start| {
        let mut out = Vec::new();
        expand(sys, alpha, start.clone(), &mut out);
        out
    });
    let mut all: Vec<(Word, Similarity)> = parts.into_iter().flatten().collect();
    all.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(all)
}

fn expand(
    sys: &IfsSystem,
    alpha: &Rational,
    (word, map, ratio): (Word, Similarity, Rational),
    out: &mut Vec<(Word, Similarity)>,
) {
    if &ratio <= alpha {
        out.push((word, map));
        return;
    }
    for (i, m) in sys.maps().iter().enumerate() {
        let child = (
            word.push(i as u32),
            map.then_unchecked(m),
            &ratio * m.ratio(),
        );
        expand(sys, alpha, child, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RatVec;

    fn two_ratio_system() -> IfsSystem {
        IfsSystem::from_scalings(
            1,
            &[
                (Rational::new(1, 2), RatVec::from_pairs(&[(-1, 4)])),
                (Rational::new(1, 3), RatVec::from_pairs(&[(1, 3)])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn alpha_one_is_the_empty_word() {
        let sys = two_ratio_system();
        assert_eq!(
            lambda_alpha(&sys, &Rational::one()).unwrap(),
            vec![Word::empty()]
        );
    }

    #[test]
    fn rejects_alpha_outside_unit_interval() {
        let sys = two_ratio_system();
        assert!(lambda_alpha(&sys, &Rational::zero()).is_err());
        assert!(lambda_alpha(&sys, &Rational::new(3, 2)).is_err());
    }

    #[test]
    fn mixed_ratios_at_one_quarter() {
        let sys = two_ratio_system();
        let words = lambda_alpha(&sys, &Rational::new(1, 4)).unwrap();
        let labels: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(labels, ["1.1", "1.2", "2.1", "2.2"]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let sys = two_ratio_system();
        let a = Rational::new(1, 50);
        assert_eq!(
            lambda_alpha_with(&sys, &a, Execution::Sequential).unwrap(),
            lambda_alpha_with(&sys, &a, Execution::Parallel).unwrap()
        );
    }
}
