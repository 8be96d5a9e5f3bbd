//! Dissociation sets: vertex sets inducing a subgraph of maximum degree at most one.

mod exact;
mod hypergraph;
mod tree_dp;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use exact::{diss_exact, diss_number, MAX_EXACT_ORDER};
pub use hypergraph::{
    check_not_triangle, check_pairwise_overlap, generated_hypergraph, skeleton, skeleton_vertices,
    Hypergraph,
};
pub use tree_dp::diss_tree_dp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DissError {
    #[error("graph of order {order} exceeds the exact-search limit of {limit}; use the tree DP")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A dissociation set together with its size and induced maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissociationCertificate {
    pub set: Vec<usize>,
    pub size: usize,
    pub max_induced_degree: usize,
}

impl DissociationCertificate {
    /// Builds a certificate for `set` (sorted and deduplicated), or `None` if the
    /// induced maximum degree exceeds one.
    pub fn new(g: &Graph, set: &[usize]) -> Option<Self> {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        let max_induced_degree = induced_max_degree(g, &set)?;
        (max_induced_degree <= 1).then_some(DissociationCertificate {
            size: set.len(),
            set,
            max_induced_degree,
        })
    }
}

/// Maximum degree of `g[set]`; `None` if a vertex is out of range.
pub fn induced_max_degree(g: &Graph, set: &[usize]) -> Option<usize> {
    let mut member = vec![false; g.order()];
    for &v in set {
        *member.get_mut(v)? = true;
    }
    Some(
        set.iter()
            .map(|&v| g.neighbors(v).filter(|&u| member[u]).count())
            .max()
            .unwrap_or(0),
    )
}

pub fn is_dissociation_set(g: &Graph, set: &[usize]) -> bool {
    matches!(induced_max_degree(g, set), Some(d) if d <= 1)
}
