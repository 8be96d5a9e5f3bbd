//! Graph sources: labeled connected graphs, free trees, explicit lists.

use super::SearchError;
use crate::graph::Graph;

pub const MAX_LABELED_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 24;

/// A finite sequence of graphs of one order split into independent chunks.
/// Chunk contents depend only on the chunk index.
pub trait GraphSource: Sync {
    fn order(&self) -> usize;
    fn chunk_count(&self) -> usize;
    fn chunk(&self, index: usize) -> Vec<Graph>;
    /// Short description used in reports and checkpoints.
    fn describe(&self) -> String;
    /// Whether every graph produced is a tree.
    fn trees_only(&self) -> bool {
        false
    }
}

/// Every labeled connected graph on `n <= 7` vertices, by edge mask.
#[derive(Debug, Clone)]
pub struct LabeledConnected {
    n: usize,
    pairs: Vec<(usize, usize)>,
    max_edges: usize,
}

const MASK_CHUNK_BITS: u32 = 14;

impl LabeledConnected {
    pub fn new(n: usize) -> Result<Self, SearchError> {
        Self::with_max_edges(n, usize::MAX)
    }

    /// Only graphs with at most `max_edges` edges.
    pub fn with_max_edges(n: usize, max_edges: usize) -> Result<Self, SearchError> {
        if n > MAX_LABELED_ORDER {
            return Err(SearchError::ResourceLimit {
                what: "labeled enumeration",
                order: n,
                limit: MAX_LABELED_ORDER,
            });
        }
        let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Ok(LabeledConnected {
            n,
            pairs,
            max_edges,
        })
    }

    fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    fn connected_mask(&self, mask: u64) -> Option<Graph> {
        if mask.count_ones() as usize > self.max_edges {
            return None;
        }
        let n = self.n;
        if n == 0 {
            return None;
        }
        let mut adj = [0u8; MAX_LABELED_ORDER];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let full = ((1u16 << n) - 1) as u8;
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        if seen & full != full {
            return None;
        }
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Some(Graph::from_edges(n, &edges).expect("valid edge list"))
    }

    /// Sequential iterator over all graphs.
    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.mask_count()).filter_map(move |m| self.connected_mask(m))
    }
}

impl GraphSource for LabeledConnected {
    fn order(&self) -> usize {
        self.n
    }

    fn chunk_count(&self) -> usize {
        (self.mask_count() >> MASK_CHUNK_BITS).max(1) as usize
    }

    fn chunk(&self, index: usize) -> Vec<Graph> {
        let total = self.mask_count();
        let size = if total >> MASK_CHUNK_BITS == 0 {
            total
        } else {
            1 << MASK_CHUNK_BITS
        };
        let start = index as u64 * size;
        (start..(start + size).min(total))
            .filter_map(|m| self.connected_mask(m))
            .collect()
    }

    fn describe(&self) -> String {
        format!("labeled connected graphs on {} vertices", self.n)
    }
}

/// Unlabeled rooted trees up to a given size, each stored as the sorted
/// (non-increasing) list of its children's ids. Ids increase with size.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    children: Vec<Vec<u32>>,
    size: Vec<usize>,
    /// `first_of_size[s]..first_of_size[s + 1]` are the ids of size `s`.
    first_of_size: Vec<usize>,
}

/// Calls `emit` with every non-increasing list of ids `<= max_id` whose sizes
/// sum to `remaining`.
fn multisets(
    size: &[usize],
    remaining: usize,
    max_id: usize,
    current: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for id in (0..=max_id).rev() {
        if size[id] > remaining {
            continue;
        }
        current.push(id as u32);
        multisets(size, remaining - size[id], id, current, emit);
        current.pop();
    }
}

impl RootedTrees {
    pub fn up_to(max_size: usize) -> Self {
        let mut t = RootedTrees {
            children: Vec::new(),
            size: Vec::new(),
            first_of_size: vec![0, 0],
        };
        for s in 1..=max_size {
            let mut fresh = Vec::new();
            if s == 1 {
                fresh.push(Vec::new());
            } else {
                let max_id = t.children.len() - 1;
                multisets(&t.size, s - 1, max_id, &mut Vec::new(), &mut |c| {
                    fresh.push(c.to_vec())
                });
            }
            for c in fresh {
                t.children.push(c);
                t.size.push(s);
            }
            t.first_of_size.push(t.children.len());
        }
        t
    }

    pub fn count_of_size(&self, s: usize) -> usize {
        if s + 1 >= self.first_of_size.len() {
            return 0;
        }
        self.first_of_size[s + 1] - self.first_of_size[s]
    }

    /// Ids of all trees of size `<= s`, as `0..end`.
    fn end_of_size(&self, s: usize) -> usize {
        self.first_of_size[(s + 1).min(self.first_of_size.len() - 1)]
    }

    /// Adds the tree `id` below `parent` (or as a new root when `parent` is
    /// `None`), returning the id of its root vertex.
    fn realize(
        &self,
        id: usize,
        parent: Option<usize>,
        edges: &mut Vec<(usize, usize)>,
        next: &mut usize,
    ) -> usize {
        let root = *next;
        *next += 1;
        if let Some(p) = parent {
            edges.push((p, root));
        }
        let mut stack: Vec<(usize, usize)> = self.children[id]
            .iter()
            .map(|&c| (c as usize, root))
            .collect();
        while let Some((c, p)) = stack.pop() {
            let v = *next;
            *next += 1;
            edges.push((p, v));
            stack.extend(self.children[c].iter().map(|&cc| (cc as usize, v)));
        }
        root
    }
}

/// One unlabeled free tree per isomorphism class, generated from its
/// centroid(s).
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    rooted: RootedTrees,
    chunks: Vec<TreeChunk>,
}

#[derive(Debug, Clone, Copy)]
enum TreeChunk {
    /// Single centroid whose largest branch is the given rooted tree.
    Central(usize),
    /// Two centroids; the first half is the given rooted tree.
    Bicentral(usize),
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<Self, SearchError> {
        if n > MAX_TREE_ORDER {
            return Err(SearchError::ResourceLimit {
                what: "free-tree enumeration",
                order: n,
                limit: MAX_TREE_ORDER,
            });
        }
        if n == 0 {
            return Err(SearchError::InvalidParameter(
                "no trees on 0 vertices".into(),
            ));
        }
        let rooted = RootedTrees::up_to(n / 2);
        let half = (n - 1) / 2;
        let mut chunks: Vec<TreeChunk> = Vec::new();
        if n == 1 {
            chunks.push(TreeChunk::Central(usize::MAX));
        } else {
            chunks.extend((0..rooted.end_of_size(half)).map(TreeChunk::Central));
        }
        if n >= 2 && n.is_multiple_of(2) {
            let s = n / 2;
            chunks.extend(
                (rooted.first_of_size[s]..rooted.first_of_size[s + 1]).map(TreeChunk::Bicentral),
            );
        }
        Ok(FreeTrees { n, rooted, chunks })
    }

    fn build_central(&self, kids: &[u32]) -> Graph {
        let mut edges = Vec::with_capacity(self.n - 1);
        let mut next = 1;
        for &k in kids {
            self.rooted
                .realize(k as usize, Some(0), &mut edges, &mut next);
        }
        Graph::from_edges(self.n, &edges).expect("valid tree")
    }

    fn build_pair(&self, a: usize, b: usize) -> Graph {
        let mut edges = Vec::with_capacity(self.n - 1);
        let mut next = 0;
        let ra = self.rooted.realize(a, None, &mut edges, &mut next);
        self.rooted.realize(b, Some(ra), &mut edges, &mut next);
        Graph::from_edges(self.n, &edges).expect("valid tree")
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.chunks.len()).flat_map(move |i| self.chunk(i))
    }
}

impl GraphSource for FreeTrees {
    fn order(&self) -> usize {
        self.n
    }

    fn chunk_count(&self) -> usize {
        self.chunks.len()
    }

    fn chunk(&self, index: usize) -> Vec<Graph> {
        match self.chunks[index] {
            TreeChunk::Central(usize::MAX) => vec![Graph::new(1)],
            TreeChunk::Central(first) => {
                let size = &self.rooted.size;
                let mut out = Vec::new();
                let rest = self.n - 1 - size[first];
                let mut current = vec![first as u32];
                multisets(size, rest, first, &mut current, &mut |kids| {
                    out.push(self.build_central(kids))
                });
                out
            }
            TreeChunk::Bicentral(a) => {
                let end = self.rooted.first_of_size[self.n / 2 + 1];
                (a..end).map(|b| self.build_pair(a, b)).collect()
            }
        }
    }

    fn describe(&self) -> String {
        format!("free trees on {} vertices", self.n)
    }

    fn trees_only(&self) -> bool {
        true
    }
}

/// An explicit list of graphs of one order.
#[derive(Debug, Clone)]
pub struct GraphList {
    n: usize,
    graphs: Vec<Graph>,
    chunk_size: usize,
    label: String,
}

impl GraphList {
    pub fn new(
        n: usize,
        graphs: Vec<Graph>,
        label: impl Into<String>,
    ) -> Result<Self, SearchError> {
        if let Some(g) = graphs.iter().find(|g| g.order() != n) {
            return Err(SearchError::InvalidParameter(format!(
                "graph of order {} in a list of order {n}",
                g.order()
            )));
        }
        Ok(GraphList {
            n,
            graphs,
            chunk_size: 256,
            label: label.into(),
        })
    }
}

impl GraphSource for GraphList {
    fn order(&self) -> usize {
        self.n
    }

    fn chunk_count(&self) -> usize {
        self.graphs.len().div_ceil(self.chunk_size)
    }

    fn chunk(&self, index: usize) -> Vec<Graph> {
        let start = index * self.chunk_size;
        self.graphs[start..(start + self.chunk_size).min(self.graphs.len())].to_vec()
    }

    fn describe(&self) -> String {
        self.label.clone()
    }

    fn trees_only(&self) -> bool {
        self.graphs.iter().all(Graph::is_tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts() {
        let t = RootedTrees::up_to(12);
        let counts: Vec<usize> = (1..=12).map(|s| t.count_of_size(s)).collect();
        assert_eq!(
            counts,
            vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766]
        );
    }

    #[test]
    fn free_tree_counts() {
        let expected = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
        for (n, &count) in expected.iter().enumerate().skip(1) {
            let trees = FreeTrees::new(n).unwrap();
            let all: Vec<Graph> = trees.iter().collect();
            assert_eq!(all.len(), count, "n = {n}");
            assert!(all.iter().all(|g| g.is_tree() && g.order() == n));
        }
        assert!(FreeTrees::new(25).is_err());
    }

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| LabeledConnected::new(n).unwrap().iter().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(LabeledConnected::new(8).is_err());
        let src = LabeledConnected::new(4).unwrap();
        let chunked: usize = (0..src.chunk_count()).map(|i| src.chunk(i).len()).sum();
        assert_eq!(chunked, 38);
    }
}
