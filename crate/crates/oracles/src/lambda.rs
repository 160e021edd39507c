use fracnet::geometry::Rational;

/// Words (0-based letters) with `r_σ ≤ α < r_{σ^-}`, found by listing every
/// word up to the first length at which all ratios fall to `α` or below.
pub fn lambda_naive(ratios: &[Rational], alpha: &Rational) -> Vec<Vec<u32>> {
    let k = ratios.len() as u32;
    let ratio = |w: &[u32]| -> Rational { w.iter().map(|&j| ratios[j as usize].clone()).product() };
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    loop {
        let mut next = Vec::new();
        for w in &layer {
            let r = ratio(w);
            let parent_above = match w.split_last() {
                None => true,
                Some((_, p)) => &ratio(p) > alpha,
            };
            if &r <= alpha && parent_above {
                out.push(w.clone());
            }
            for j in 0..k {
                let mut v = w.clone();
                v.push(j);
                next.push(v);
            }
        }
        if layer.iter().all(|w| &ratio(w) <= alpha) {
            break;
        }
        layer = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_gives_the_empty_word() {
        assert_eq!(
            lambda_naive(&[Rational::half(), Rational::half()], &Rational::one()),
            vec![Vec::<u32>::new()]
        );
    }

    #[test]
    fn mixed_ratios() {
        let rs = [Rational::half(), Rational::new(1, 4)];
        let got = lambda_naive(&rs, &Rational::new(1, 4));
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1]]);
    }
}
