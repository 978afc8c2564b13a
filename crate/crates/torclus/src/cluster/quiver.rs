//! Quiver mutation classes of skew-symmetric exchange matrices and
//! finite-type recognition via Dynkin orientations.

use std::collections::{BTreeSet, VecDeque};

/// Matrix mutation of a square skew-symmetric matrix in direction k.
pub fn mutate_square(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else if b[i][k] > 0 && b[k][j] > 0 {
                b[i][j] + b[i][k] * b[k][j]
            } else if b[i][k] < 0 && b[k][j] < 0 {
                b[i][j] - b[i][k] * b[k][j]
            } else {
                b[i][j]
            };
        }
    }
    out
}

/// Canonical representative of a quiver up to vertex permutation: the
/// lexicographically least permuted matrix.
fn canonical(b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Vec<i64>>> = None;
    permute(&mut perm, 0, &mut |p| {
        let cand: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| b[p[i]][p[j]]).collect())
            .collect();
        if best.as_ref().map_or(true, |bst| cand < *bst) {
            best = Some(cand);
        }
    });
    best.unwrap()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Label a quiver that is an orientation of a simply-laced Dynkin diagram,
/// or None.
pub fn dynkin_label(b: &[Vec<i64>]) -> Option<String> {
    let n = b.len();
    if n == 0 {
        return None;
    }
    // Simple underlying graph: all arrows of weight 1.
    for i in 0..n {
        for j in 0..n {
            if b[i][j].abs() > 1 {
                return None;
            }
        }
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| b[i][j] != 0).collect())
        .collect();
    let edge_count: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return None;
    }
    // Connectivity (tree).
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return None;
    }
    let degrees: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    if degrees.iter().any(|&d| d > 3) {
        return None;
    }
    let branches: Vec<usize> = (0..n).filter(|&i| degrees[i] == 3).collect();
    match branches.len() {
        0 => Some(format!("A{}", n)),
        1 => {
            let c = branches[0];
            let mut arms: Vec<usize> = adj[c]
                .iter()
                .map(|&s| {
                    let mut len = 1;
                    let mut prev = c;
                    let mut cur = s;
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        if adj[cur].len() != 2 {
                            break;
                        }
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Some(format!("D{}", n)),
                [1, 2, 2] => Some("E6".to_string()),
                [1, 2, 3] => Some("E7".to_string()),
                [1, 2, 4] => Some("E8".to_string()),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Debug)]
pub struct QuiverClass {
    pub quivers: Vec<Vec<Vec<i64>>>,
    pub label: Option<String>,
    pub finite: bool,
}

/// BFS over the quiver mutation class of a skew-symmetric matrix, labeling
/// the class when a Dynkin orientation appears.
pub fn quiver_mutation_class(b: &[Vec<i64>], max_nodes: usize) -> QuiverClass {
    let n = b.len();
    for i in 0..n {
        assert_eq!(b[i].len(), n);
        for j in 0..n {
            assert_eq!(b[i][j], -b[j][i], "principal part must be skew-symmetric");
        }
    }
    let start = canonical(b);
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([b.to_vec()]);
    let mut label = dynkin_label(b);
    let mut finite = true;
    while let Some(cur) = queue.pop_front() {
        for k in 0..n {
            let next = mutate_square(&cur, k);
            let key = canonical(&next);
            if seen.insert(key) {
                if seen.len() > max_nodes {
                    finite = false;
                    queue.clear();
                    break;
                }
                if label.is_none() {
                    label = dynkin_label(&next);
                }
                queue.push_back(next);
            }
        }
    }
    QuiverClass {
        quivers: seen.into_iter().collect(),
        label,
        finite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dynkin_orientation_self_label() {
        let a3 = vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]];
        assert_eq!(dynkin_label(&a3), Some("A3".to_string()));
        let d4 = vec![
            vec![0, 1, 1, 1],
            vec![-1, 0, 0, 0],
            vec![-1, 0, 0, 0],
            vec![-1, 0, 0, 0],
        ];
        assert_eq!(dynkin_label(&d4), Some("D4".to_string()));
    }

    #[test]
    fn a2_class() {
        let a2 = vec![vec![0, 1], vec![-1, 0]];
        let cls = quiver_mutation_class(&a2, 1000);
        assert_eq!(cls.label, Some("A2".to_string()));
        assert!(cls.finite);
        assert_eq!(cls.quivers.len(), 1);
    }

    #[test]
    fn a3_cycle_class_is_type_a3() {
        // Oriented triangle is mutation equivalent to an A3 orientation.
        let tri = vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]];
        let cls = quiver_mutation_class(&tri, 1000);
        assert_eq!(cls.label, Some("A3".to_string()));
        assert!(cls.finite);
    }

    #[test]
    fn markov_quiver_not_finite_type() {
        let markov = vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]];
        let cls = quiver_mutation_class(&markov, 50);
        assert_eq!(cls.label, None);
    }
}
