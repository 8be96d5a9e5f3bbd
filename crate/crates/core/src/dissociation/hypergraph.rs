//! Skeletons and the hypergraph generated by a dissociation set.

use serde::{Deserialize, Serialize};

use super::{is_dissociation_set, DissError};
use crate::graph::{Graph, GraphError};

/// A hypergraph on a subset of graph vertices. Edges are sorted vertex lists
/// and may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Whether every pair of vertices is joined by a chain of hyperedges.
    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let index = |v: usize| self.vertices.binary_search(&v).ok();
        let mut root: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for e in &self.edges {
            let Some(first) = e.first().and_then(|&v| index(v)) else {
                continue;
            };
            for &v in &e[1..] {
                if let Some(i) = index(v) {
                    let (a, b) = (find(&mut root, first), find(&mut root, i));
                    root[a] = b;
                }
            }
        }
        let r0 = find(&mut root, 0);
        (1..self.vertices.len()).all(|i| find(&mut root, i) == r0)
    }
}

/// Hypergraph on `V \ D` with one edge per graph edge inside `V \ D` and one
/// edge per component of `G[D]` whose neighbourhood in `V \ D` has at least
/// two vertices.
pub fn generated_hypergraph(g: &Graph, d: &[usize]) -> Result<Hypergraph, DissError> {
    if !is_dissociation_set(g, d) {
        return Err(DissError::InvalidParameter(format!(
            "{d:?} is not a dissociation set"
        )));
    }
    let n = g.order();
    let mut in_d = vec![false; n];
    for &v in d {
        in_d[v] = true;
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| !in_d[v]).collect();
    let mut edges: Vec<Vec<usize>> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !in_d[u] && !in_d[v])
        .map(|(u, v)| vec![u, v])
        .collect();
    let mut seen = vec![false; n];
    for u in 0..n {
        if !in_d[u] || seen[u] {
            continue;
        }
        let mut component = vec![u];
        component.extend(g.neighbors(u).filter(|&w| in_d[w]));
        let mut outside: Vec<usize> = Vec::new();
        for &x in &component {
            seen[x] = true;
            outside.extend(g.neighbors(x).filter(|&w| !in_d[w]));
        }
        outside.sort_unstable();
        outside.dedup();
        if outside.len() >= 2 {
            edges.push(outside);
        }
    }
    Ok(Hypergraph { vertices, edges })
}

/// No two distinct hyperedges share more than one vertex.
pub fn check_pairwise_overlap(h: &Hypergraph) -> bool {
    h.edges.iter().enumerate().all(|(i, e)| {
        h.edges[i + 1..]
            .iter()
            .all(|f| e.iter().filter(|v| f.contains(v)).count() <= 1)
    })
}

/// The hypergraph is not a triangle of three 2-element edges on three vertices.
pub fn check_not_triangle(h: &Hypergraph) -> bool {
    if h.vertices.len() != 3 || h.edges.len() != 3 || h.edges.iter().any(|e| e.len() != 2) {
        return true;
    }
    let mut distinct = h.edges.clone();
    distinct.sort();
    distinct.dedup();
    distinct.len() != 3
}

/// Vertices kept by [`skeleton`], ascending.
pub fn skeleton_vertices(g: &Graph, anchors: &[usize]) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    let mut is_anchor = vec![false; n];
    for &a in anchors {
        if a >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: a,
                order: n,
            });
        }
        is_anchor[a] = true;
    }
    let mut keep = is_anchor.clone();
    let mut seen = is_anchor.clone();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut component = vec![s];
        let mut touched: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < component.len() {
            let v = component[i];
            i += 1;
            for w in g.neighbors(v) {
                if is_anchor[w] {
                    if !touched.contains(&w) {
                        touched.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    component.push(w);
                }
            }
        }
        if touched.len() != 1 {
            for v in component {
                keep[v] = true;
            }
        }
    }
    Ok((0..n).filter(|&v| keep[v]).collect())
}

/// Removes every component of `g - anchors` adjacent to exactly one anchor.
/// Remaining vertices keep their relative order.
pub fn skeleton(g: &Graph, anchors: &[usize]) -> Result<Graph, GraphError> {
    g.induced_subgraph(&skeleton_vertices(g, anchors)?)
}
