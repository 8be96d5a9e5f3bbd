//! Canonical forms: equal strings exactly for isomorphic graphs.
//!
//! Trees of any order use a centre-rooted AHU encoding (`T:` prefix). Other
//! graphs with at most [`MAX_GENERAL_CANON_ORDER`] vertices use colour
//! refinement with individualization, keeping the largest adjacency code
//! (`G:` prefix).

use super::SearchError;
use crate::graph::Graph;

pub const MAX_GENERAL_CANON_ORDER: usize = 12;

pub fn canonical_form(g: &Graph) -> Result<String, SearchError> {
    if g.is_tree() {
        return Ok(tree_canonical_form(g));
    }
    let n = g.order();
    if n > MAX_GENERAL_CANON_ORDER {
        return Err(SearchError::ResourceLimit {
            what: "canonical form of a non-tree",
            order: n,
            limit: MAX_GENERAL_CANON_ORDER,
        });
    }
    Ok(general_canonical_form(g))
}

/// Vertices of minimum eccentricity (one or two).
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in g.neighbors(v) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &Graph, root: usize) -> String {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut done: Vec<String> = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut codes[v]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in &kids {
            s.push_str(k);
        }
        s.push(')');
        if v != root {
            codes[parent[v]].push(s);
        } else {
            done[v] = s;
        }
    }
    std::mem::take(&mut done[root])
}

fn tree_canonical_form(g: &Graph) -> String {
    let best = tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .unwrap_or_default();
    format!("T:{best}")
}

/// Ordered partition refinement by neighbour counts into each cell.
fn refine(adj: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u16 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((adj[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn leaf_code(adj: &[u16], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u128;
        }
    }
    code
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = leaf_code(adj, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        // Swapping twins is an automorphism; one of them suffices.
        let twin = tried
            .iter()
            .any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(adj, next, best);
    }
}

fn general_canonical_form(g: &Graph) -> String {
    let n = g.order();
    let adj: Vec<u16> = (0..n).map(|v| g.neighbor_word(v) as u16).collect();
    let mut by_degree: Vec<Vec<usize>> = Vec::new();
    let mut degs: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    degs.sort_unstable();
    for (d, v) in degs {
        match by_degree.last_mut() {
            Some(cell) if g.degree(cell[0]) == d => cell.push(v),
            _ => by_degree.push(vec![v]),
        }
    }
    let mut best = None;
    if n > 0 {
        search(&adj, by_degree, &mut best);
    }
    format!("G:{n}:{:x}", best.unwrap_or(0))
}
