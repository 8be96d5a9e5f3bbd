//! Simple undirected graphs stored as symmetric bit matrices.
//!
//! Every row of the adjacency matrix is a run of `u64` words, so graphs with
//! at most 64 vertices use a single word per row and all set operations are
//! one instruction. Larger graphs (the family graphs reach a few hundred
//! vertices) use the same layout with more words per row.

mod family;
mod format;
mod named;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use family::{build_family, predicted_extremal, Family, FamilyGraph, FamilySpec, VertexRole};
pub use format::{decode_graph6, encode_graph6, to_dot, Graph6Error};
pub use named::{complete, complete_bipartite, cycle, join, path, smith_graph, star, SmithKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{u}-{v} is not an edge")]
    InvalidEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Undirected simple graph on the dense vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Raw adjacency row of `v` (bit `u` set iff `uv` is an edge).
    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> &[u64] {
        self.row(v)
    }

    /// Adjacency row of `v` as a single word; only valid for graphs of order at most 64.
    #[inline]
    pub fn neighbor_word(&self, v: usize) -> u64 {
        debug_assert!(self.words == 1);
        self.bits[v]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.bits[u * self.words + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    /// Inserts the edge `uv`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
        Ok(())
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge { u, v });
        }
        self.set_bit(u, v, false);
        self.set_bit(v, u, false);
        Ok(())
    }

    /// Appends a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.n + 1;
        let words = words_for(n);
        if words != self.words {
            let mut bits = vec![0; n * words];
            for v in 0..self.n {
                bits[v * words..v * words + self.words].copy_from_slice(self.row(v));
            }
            self.bits = bits;
            self.words = words;
        } else {
            self.bits.extend(std::iter::repeat_n(0, words));
        }
        self.n = n;
        n - 1
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        let row = self.row(v);
        Neighbors {
            row,
            word: 0,
            current: row.first().copied().unwrap_or(0),
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Neighbor lists, one sorted `Vec` per vertex.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.component_of(0).len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Vertices reachable from `start`, in BFS order.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Connected components, each listed in increasing vertex order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = self.component_of(s);
            for &v in &comp {
                seen[v] = true;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            index[v] = i;
        }
        let mut h = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for u in self.neighbors(v) {
                let j = index[u];
                if j != usize::MAX && j > i {
                    h.set_bit(i, j, true);
                    h.set_bit(j, i, true);
                }
            }
        }
        Ok(h)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::DuplicateVertex(p));
            }
        }
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.set_bit(perm[u], perm[v], true);
            h.set_bit(perm[v], perm[u], true);
        }
        Ok(h)
    }

    /// Replaces the edge `uv` by a path `u w v` through a new vertex `w = n`.
    pub fn subdivide(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge { u, v });
        }
        let mut h = self.clone();
        let w = h.add_vertex();
        h.delete_edge(u, v)?;
        h.add_edge(u, w)?;
        h.add_edge(w, v)?;
        Ok(h)
    }

    /// Hangs two new pendant paths with `k` and `m` vertices at `v`.
    ///
    /// The first path occupies ids `n..n+k` (closest to `v` first), the second `n+k..n+k+m`.
    pub fn attach_two_paths(&self, v: usize, k: usize, m: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut h = self.clone();
        for len in [k, m] {
            let mut prev = v;
            for _ in 0..len {
                let w = h.add_vertex();
                h.add_edge(prev, w)?;
                prev = w;
            }
        }
        Ok(h)
    }

    /// Whether `seq` is an internal path: consecutive vertices adjacent, vertices
    /// distinct except possibly first = last, both ends of degree at least 3 and
    /// every interior vertex of degree exactly 2.
    pub fn is_internal_path(&self, seq: &[usize]) -> bool {
        let l = seq.len();
        if l < 2 || seq.iter().any(|&v| v >= self.n) {
            return false;
        }
        let body = if l > 2 && seq[0] == seq[l - 1] {
            &seq[..l - 1]
        } else {
            seq
        };
        let mut seen = vec![false; self.n];
        for &v in body {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if !seq.windows(2).all(|w| self.has_edge(w[0], w[1])) {
            return false;
        }
        self.degree(seq[0]) >= 3
            && self.degree(seq[l - 1]) >= 3
            && seq[1..l - 1].iter().all(|&v| self.degree(v) == 2)
    }

    /// The maximal internal path through edge `uv`, if that edge lies on one.
    pub fn internal_path_through(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if !self.has_edge(u, v) {
            return None;
        }
        // Walk outwards through degree-2 vertices from both ends.
        let walk = |from: usize, start: usize| -> Option<Vec<usize>> {
            let mut trail = vec![start];
            let (mut prev, mut cur) = (from, start);
            while self.degree(cur) == 2 {
                let next = self.neighbors(cur).find(|&x| x != prev)?;
                if next == start || trail.len() > self.n {
                    return None;
                }
                trail.push(next);
                prev = cur;
                cur = next;
            }
            if self.degree(cur) >= 3 {
                Some(trail)
            } else {
                None
            }
        };
        let left = walk(v, u)?;
        let right = walk(u, v)?;
        let mut seq: Vec<usize> = left.into_iter().rev().collect();
        seq.extend(right);
        self.is_internal_path(&seq).then_some(seq)
    }

    /// Edges lying on some internal path.
    pub fn internal_path_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.internal_path_through(u, v).is_some())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let p = path(5).unwrap();
        assert!(p.is_connected());
        assert_eq!(p.edge_count(), 4);
        assert_eq!(degree_of(&star(6).unwrap(), 0), 6);
        let c = cycle(5).unwrap();
        let sub = c.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub, path(4).unwrap());
    }

    fn degree_of(g: &Graph, v: usize) -> usize {
        g.degree(v)
    }

    #[test]
    fn delete_vertex_renumbers() {
        let g = path(4).unwrap().delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert!(matches!(
            path(2).unwrap().delete_vertex(5),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn wide_graphs_grow_rows() {
        let mut g = path(64).unwrap();
        let w = g.add_vertex();
        g.add_edge(63, w).unwrap();
        assert_eq!(g, path(65).unwrap());
        assert_eq!(g.neighbors(63).collect::<Vec<_>>(), vec![62, 64]);
        assert!(g.is_tree());
    }

    #[test]
    fn subdivide_and_errors() {
        let p3 = path(3).unwrap();
        let s = p3.subdivide(1, 2).unwrap();
        assert!(s.is_tree() && s.order() == 4 && s.max_degree() == 2);
        assert_eq!(
            p3.subdivide(0, 2),
            Err(GraphError::InvalidEdge { u: 0, v: 2 })
        );
        let c6 = cycle(5).unwrap().subdivide(0, 1).unwrap();
        assert!(c6.is_connected() && c6.degrees().iter().all(|&d| d == 2) && c6.order() == 6);
    }

    #[test]
    fn two_paths() {
        let g = Graph::new(1).attach_two_paths(0, 2, 1).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        let same = path(3).unwrap().attach_two_paths(1, 0, 0).unwrap();
        assert_eq!(same, path(3).unwrap());
        assert!(path(3).unwrap().attach_two_paths(3, 1, 1).is_err());
    }

    #[test]
    fn internal_paths() {
        assert!(!path(10).unwrap().is_internal_path(&[2, 3, 4]));
        assert!(!path(10).unwrap().is_internal_path(&[0, 1]));
        // Two adjacent degree-3 vertices.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert!(g.is_internal_path(&[0, 1]));
        assert!(!g.is_internal_path(&[0]));
        assert_eq!(g.internal_path_edges(), vec![(0, 1)]);
        // A cycle hanging at one branch vertex closes on itself.
        let lollipop = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        assert!(lollipop.is_internal_path(&[0, 1, 2, 0]));
        assert_eq!(lollipop.internal_path_through(1, 2), Some(vec![0, 1, 2, 0]));
        assert_eq!(lollipop.internal_path_through(0, 3), None);
    }
}
