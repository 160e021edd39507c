use std::fmt;

use serde::Serialize;

use crate::geometry::{Rational, Similarity};
use crate::ifs::Word;

/// Weighted transition between a parent net interval and one child.
///
/// Rows are the parent's neighbor maps and columns the child's, both in
/// matrix order. Entry `(i, k)` is `p_j` when `S_j` extends row `i` to column
/// `k`, summed if several letters do.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TransitionMatrix {
    pub rows: Vec<Similarity>,
    pub cols: Vec<Similarity>,
    pub entries: Vec<Vec<Rational>>,
    /// Letters (0-based) contributing to each entry.
    pub letters: Vec<Vec<Vec<u32>>>,
}

impl TransitionMatrix {
    pub(crate) fn from_pattern(
        rows: Vec<Similarity>,
        cols: Vec<Similarity>,
        pattern: &[Vec<Vec<Word>>],
        probs: Option<&[Rational]>,
    ) -> Self {
        let letters: Vec<Vec<Vec<u32>>> = pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ws| {
                        ws.iter()
                            .flat_map(|w| w.letters().iter().copied())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let entries = pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ws| match probs {
                        Some(p) => ws
                            .iter()
                            .map(|w| {
                                w.letters()
                                    .iter()
                                    .map(|&j| p[j as usize].clone())
                                    .product::<Rational>()
                            })
                            .sum(),
                        None if ws.is_empty() => Rational::zero(),
                        None => Rational::one(),
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix {
            rows,
            cols,
            entries,
            letters,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, k: usize) -> &Rational {
        &self.entries[i][k]
    }

    /// Whether every column has a nonzero entry.
    pub fn columns_covered(&self) -> bool {
        (0..self.n_cols()).all(|k| self.entries.iter().any(|row| !row[k].is_zero()))
    }

    /// `v · M` for a row vector `v`.
    pub fn left_mul(&self, v: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(v.len(), self.n_rows());
        (0..self.n_cols())
            .map(|k| {
                v.iter()
                    .zip(&self.entries)
                    .filter(|(x, row)| !x.is_zero() && !row[k].is_zero())
                    .map(|(x, row)| x * &row[k])
                    .sum()
            })
            .collect()
    }

    /// Symbolic rendering such as `[p5 p3; 0 p1]`, with 1-based letters.
    pub fn symbolic(&self) -> String {
        let rows: Vec<String> = self
            .letters
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ls| {
                        if ls.is_empty() {
                            "0".to_string()
                        } else {
                            ls.iter()
                                .map(|j| format!("p{}", j + 1))
                                .collect::<Vec<_>>()
                                .join("+")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// Dense product of square or rectangular rational matrices.
pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|k| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, brow)| !x.is_zero() && !brow[k].is_zero())
                        .map(|(x, brow)| x * &brow[k])
                        .sum()
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.symbolic(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn entries_come_from_pattern_letters() {
        let id = Similarity::identity(1);
        let pattern = vec![
            vec![vec![Word::from_labels(&[5])], vec![Word::from_labels(&[3])]],
            vec![vec![], vec![Word::from_labels(&[1])]],
        ];
        let probs = [r(1, 8), r(1, 8), r(1, 8), r(1, 8), r(1, 2)];
        let m = TransitionMatrix::from_pattern(
            vec![id.clone(), id.clone()],
            vec![id.clone(), id],
            &pattern,
            Some(&probs),
        );
        assert_eq!(m.symbolic(), "[p5 p3; 0 p1]");
        assert_eq!(m.to_string(), "[1/2 1/8; 0 1/8]");
        assert!(m.columns_covered());
        assert_eq!(m.left_mul(&[r(1, 2), r(1, 8)]), vec![r(1, 4), r(5, 64)]);
    }

    #[test]
    fn product_of_two_by_two() {
        let a = vec![vec![r(1, 2), r(1, 8)], vec![r(0, 1), r(1, 8)]];
        let p = mat_mul(&a, &a);
        assert_eq!(p[0], vec![r(1, 4), r(5, 64)]);
        assert_eq!(p[1], vec![r(0, 1), r(1, 64)]);
    }
}
