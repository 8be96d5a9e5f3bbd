use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

/// Path `P_n` on vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Star `S_t`: center `0` joined to `t` leaves.
pub fn star(t: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
    Graph::from_edges(t + 1, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_bit(u, v, true);
            g.set_bit(v, u, true);
        }
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set_bit(u, v, true);
            g.set_bit(v, u, true);
        }
    }
    g
}

/// Join `g ∨ h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.order(), h.order());
    let mut out = Graph::new(n1 + n2);
    for (u, v) in g.edges() {
        out.set_bit(u, v, true);
        out.set_bit(v, u, true);
    }
    for (u, v) in h.edges() {
        out.set_bit(n1 + u, n1 + v, true);
        out.set_bit(n1 + v, n1 + u, true);
    }
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            out.set_bit(u, v, true);
            out.set_bit(v, u, true);
        }
    }
    out
}

/// The connected graphs with spectral radius at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmithKind {
    /// `n` vertices: a path on `n - 1` vertices with a pendant at its second vertex.
    W(usize),
    E6,
    E7,
    E8,
    /// `n` vertices: a path on `n - 2` vertices with pendants at its second and
    /// second-to-last vertices. For `n = 5` both pendants share the middle
    /// vertex and the graph is `K_{1,4}`.
    WTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

impl SmithKind {
    pub fn order(&self) -> usize {
        match *self {
            SmithKind::W(n) | SmithKind::WTilde(n) => n,
            SmithKind::E6 => 6,
            SmithKind::E7 | SmithKind::E6Tilde => 7,
            SmithKind::E8 | SmithKind::E7Tilde => 8,
            SmithKind::E8Tilde => 9,
        }
    }

    /// Whether the spectral radius is exactly 2 (otherwise it is below 2).
    pub fn has_radius_two(&self) -> bool {
        matches!(
            self,
            SmithKind::WTilde(_) | SmithKind::E6Tilde | SmithKind::E7Tilde | SmithKind::E8Tilde
        )
    }
}

impl fmt::Display for SmithKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmithKind::W(n) => write!(f, "W({n})"),
            SmithKind::WTilde(n) => write!(f, "W~({n})"),
            SmithKind::E6 => f.write_str("E6"),
            SmithKind::E7 => f.write_str("E7"),
            SmithKind::E8 => f.write_str("E8"),
            SmithKind::E6Tilde => f.write_str("E6~"),
            SmithKind::E7Tilde => f.write_str("E7~"),
            SmithKind::E8Tilde => f.write_str("E8~"),
        }
    }
}

impl FromStr for SmithKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let sized = |prefix: &str| -> Option<Result<usize, GraphError>> {
            let rest = s
                .strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?;
            Some(
                rest.trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad size in {s:?}"))),
            )
        };
        if let Some(n) = sized("W~") {
            return Ok(SmithKind::WTilde(n?));
        }
        if let Some(n) = sized("W") {
            return Ok(SmithKind::W(n?));
        }
        match s {
            "E6" => Ok(SmithKind::E6),
            "E7" => Ok(SmithKind::E7),
            "E8" => Ok(SmithKind::E8),
            "E6~" => Ok(SmithKind::E6Tilde),
            "E7~" => Ok(SmithKind::E7Tilde),
            "E8~" => Ok(SmithKind::E8Tilde),
            _ => Err(invalid(format!("unknown Smith graph {s:?}"))),
        }
    }
}

/// Path on `len` vertices plus pendants attached at the listed path positions.
fn path_with_pendants(len: usize, pendants: &[usize]) -> Result<Graph, GraphError> {
    let mut g = path(len)?;
    for &at in pendants {
        let w = g.add_vertex();
        g.add_edge(at, w)?;
    }
    Ok(g)
}

pub fn smith_graph(kind: SmithKind) -> Result<Graph, GraphError> {
    match kind {
        SmithKind::W(n) => {
            if n < 4 {
                return Err(invalid(format!("W(n) needs n >= 4, got {n}")));
            }
            path_with_pendants(n - 1, &[1])
        }
        SmithKind::WTilde(n) => {
            if n < 5 {
                return Err(invalid(format!("W~(n) needs n >= 5, got {n}")));
            }
            path_with_pendants(n - 2, &[1, n - 4])
        }
        SmithKind::E6 => path_with_pendants(5, &[2]),
        SmithKind::E7 => path_with_pendants(6, &[2]),
        SmithKind::E8 => path_with_pendants(7, &[2]),
        SmithKind::E6Tilde => {
            let mut g = path_with_pendants(5, &[2])?;
            let w = g.add_vertex();
            g.add_edge(5, w)?;
            Ok(g)
        }
        SmithKind::E7Tilde => path_with_pendants(7, &[3]),
        SmithKind::E8Tilde => path_with_pendants(8, &[2]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert_eq!(star(4).unwrap().order(), 5);
        for kind in [
            SmithKind::E6,
            SmithKind::E7,
            SmithKind::E8,
            SmithKind::E6Tilde,
            SmithKind::E7Tilde,
            SmithKind::E8Tilde,
            SmithKind::W(9),
            SmithKind::WTilde(9),
        ] {
            let g = smith_graph(kind).unwrap();
            assert_eq!(g.order(), kind.order(), "{kind}");
            assert!(g.is_tree(), "{kind}");
            assert_eq!(kind.to_string().parse::<SmithKind>().unwrap(), kind);
        }
        assert!(smith_graph(SmithKind::W(3)).is_err());
        assert!(smith_graph(SmithKind::WTilde(4)).is_err());
    }

    #[test]
    fn w_tilde_has_two_branch_vertices() {
        for n in 6..=20 {
            let g = smith_graph(SmithKind::WTilde(n)).unwrap();
            assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 2, "n={n}");
        }
        let k14 = smith_graph(SmithKind::WTilde(5)).unwrap();
        assert_eq!(k14.max_degree(), 4);
    }

    #[test]
    fn join_wheel() {
        let w = join(&cycle(4).unwrap(), &Graph::new(1));
        assert_eq!(w.order(), 5);
        assert_eq!(w.edge_count(), 8);
        assert_eq!(w.degree(4), 4);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(complete(5).edge_count(), 10);
    }
}
