//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use dissrho::Graph;
use nalgebra::DMatrix;

pub fn adjacency(g: &Graph) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn dense_rho(g: &Graph) -> f64 {
    adjacency(g).symmetric_eigen().eigenvalues.max()
}

/// Largest subset of vertices inducing maximum degree at most one, by trying
/// every subset.
pub fn brute_diss(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| {
            (0..n)
                .filter(|&u| mask >> u & 1 == 1 && g.has_edge(u, v))
                .count()
                <= 1
        });
        if ok {
            best = size;
        }
    }
    best
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Vec<i64>>]) -> Vec<i64> {
    // Entries are polynomials in lambda, lowest degree first.
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut total = vec![0i64; n + 1];
    for j in 0..n {
        if m[0][j].iter().all(|&c| c == 0) {
            continue;
        }
        let minor: Vec<Vec<Vec<i64>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let sub = cofactor_det(&minor);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for (a, &x) in m[0][j].iter().enumerate() {
            for (b, &y) in sub.iter().enumerate() {
                total[a + b] += sign * x * y;
            }
        }
    }
    total
}

/// `det(lambda I - A)` coefficients, lowest degree first.
pub fn cofactor_char_poly(g: &Graph) -> Vec<i64> {
    let n = g.order();
    let m: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![0, 1]
                    } else if g.has_edge(i, j) {
                        vec![-1]
                    } else {
                        vec![0]
                    }
                })
                .collect()
        })
        .collect();
    let mut p = cofactor_det(&m);
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Centre-rooted AHU string of a tree.
pub fn tree_code(g: &Graph) -> String {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    let mut removed = vec![false; n];
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for u in 0..n {
                if g.has_edge(u, v) && !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centres: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    fn code(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = (0..g.order())
            .filter(|&u| g.has_edge(u, v) && Some(u) != parent)
            .map(|u| code(g, u, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centres.iter().map(|&c| code(g, c, None)).min().unwrap()
}

/// All labeled trees on `n >= 2` vertices via Pruefer sequences.
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut k| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            let mut deg = vec![1usize; n];
            for &s in &seq {
                deg[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
                edges.push((leaf, s));
                deg[leaf] -= 1;
                deg[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Contracts the degree-two vertex `w` into one of its neighbours.
pub fn contract(g: &Graph, w: usize) -> Graph {
    let nb: Vec<usize> = g.neighbors(w).collect();
    assert_eq!(nb.len(), 2);
    let mut h = g.clone();
    h.delete_edge(w, nb[0]).unwrap();
    h.delete_edge(w, nb[1]).unwrap();
    h.add_edge(nb[0], nb[1]).unwrap();
    let keep: Vec<usize> = (0..g.order()).filter(|&v| v != w).collect();
    h.induced_subgraph(&keep).unwrap()
}
