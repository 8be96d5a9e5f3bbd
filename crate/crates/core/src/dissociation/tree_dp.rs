use super::DissError;
use crate::graph::Graph;

/// Dissociation number of a tree in linear time.
///
/// Each vertex keeps three values for its subtree: the vertex is outside the
/// set, inside with no chosen child, or inside and matched to one chosen child.
pub fn diss_tree_dp(t: &Graph) -> Result<usize, DissError> {
    if !t.is_tree() {
        return Err(DissError::InvalidParameter(
            "tree DP needs a connected graph with n - 1 edges".into(),
        ));
    }
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut out = vec![0i64; n];
    let mut alone = vec![1i64; n];
    let mut gain = vec![i64::MIN; n];
    for &v in order.iter().rev() {
        if v != 0 {
            let p = parent[v];
            let best = out[v].max(alone[v]).max(alone[v].saturating_add(gain[v]));
            out[p] += best;
            alone[p] += out[v];
            gain[p] = gain[p].max(alone[v] - out[v]);
        }
    }
    let best = out[0].max(alone[0]).max(alone[0].saturating_add(gain[0]));
    Ok(best as usize)
}
