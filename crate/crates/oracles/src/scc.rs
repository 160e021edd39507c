/// Strongly connected components from the transitive closure: `i ~ j` when
/// each reaches the other. Components are sorted and listed by smallest
/// vertex.
#[allow(clippy::needless_range_loop)]
pub fn scc_naive(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
        for &j in &adj[i] {
            row[j] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut placed = vec![false; n];
    for i in 0..n {
        if placed[i] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
        for &j in &comp {
            placed[j] = true;
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_tail() {
        let adj = vec![vec![1], vec![2], vec![1], vec![]];
        assert_eq!(scc_naive(&adj), vec![vec![0], vec![1, 2], vec![3]]);
    }
}
