//! The two three-anchor tree families.
//!
//! `G(a,b,c;p,q,r)` starts from the path `v1 ... v7` and hangs, at the anchors
//! `v1`, `v4`, `v7`, respectively `a`/`b`/`c` leaves and `p`/`q`/`r` pendant
//! paths on two vertices. `H(a,b,c;p,q,r)` does the same on the three leaves of
//! the five-vertex tree obtained from `P_4` by adding a pendant at its second
//! vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "G")]
    G,
    #[serde(rename = "H")]
    H,
}

/// Parameters `(a,b,c;p,q,r)` of a family graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl FamilySpec {
    pub fn g(a: usize, b: usize, c: usize, p: usize, q: usize, r: usize) -> Self {
        FamilySpec {
            family: Family::G,
            a,
            b,
            c,
            p,
            q,
            r,
        }
    }

    pub fn h(a: usize, b: usize, c: usize, p: usize, q: usize, r: usize) -> Self {
        FamilySpec {
            family: Family::H,
            a,
            b,
            c,
            p,
            q,
            r,
        }
    }

    fn core_order(&self) -> usize {
        match self.family {
            Family::G => 7,
            Family::H => 5,
        }
    }

    pub fn order(&self) -> usize {
        self.core_order() + self.a + self.b + self.c + 2 * (self.p + self.q + self.r)
    }

    pub fn leaves(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    pub fn pendant_paths(&self) -> [usize; 3] {
        [self.p, self.q, self.r]
    }

    /// Degrees of the three anchors in the realized graph.
    pub fn anchor_degrees(&self) -> [usize; 3] {
        let core = match self.family {
            Family::G => [1, 2, 1],
            Family::H => [1, 1, 1],
        };
        [
            core[0] + self.a + self.p,
            core[1] + self.b + self.q,
            core[2] + self.c + self.r,
        ]
    }

    pub fn max_degree(&self) -> usize {
        let core_max = match self.family {
            Family::G => 2,
            Family::H => 3,
        };
        self.anchor_degrees()
            .into_iter()
            .max()
            .unwrap_or(0)
            .max(core_max)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family {
            Family::G => 'G',
            Family::H => 'H',
        };
        write!(
            f,
            "{tag}({},{},{};{},{},{})",
            self.a, self.b, self.c, self.p, self.q, self.r
        )
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses `G(a,b,c;p,q,r)` or `H(a,b,c;p,q,r)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidParameter(format!("malformed family spec {s:?}"));
        let s = s.trim();
        let family = match s.chars().next() {
            Some('G') | Some('g') => Family::G,
            Some('H') | Some('h') => Family::H,
            _ => return Err(bad()),
        };
        let inner = s[1..]
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let nums: Vec<usize> = inner
            .split([',', ';'])
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if nums.len() != 6 {
            return Err(bad());
        }
        Ok(FamilySpec {
            family,
            a: nums[0],
            b: nums[1],
            c: nums[2],
            p: nums[3],
            q: nums[4],
            r: nums[5],
        })
    }
}

/// What a vertex of a realized family graph is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// Anchor `0`, `1` or `2`.
    Anchor(usize),
    /// Non-anchor core vertex. For `G`: `0..4` are `v2, v3, v5, v6`. For `H`:
    /// `0` is the branch vertex adjacent to anchors 0 and 1, `1` its neighbour
    /// towards anchor 2.
    Core(usize),
    /// Leaf attached to the given anchor.
    Leaf(usize),
    /// Vertex of a pendant two-path adjacent to the given anchor.
    PathNear(usize),
    /// End vertex of a pendant two-path at the given anchor.
    PathFar(usize),
}

/// A realized family graph with its vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub anchors: [usize; 3],
    pub roles: Vec<VertexRole>,
}

/// Builds the family graph. Core vertices come first, then for anchors 0, 1, 2
/// in turn their leaves followed by their pendant paths (near vertex, far vertex).
pub fn build_family(spec: &FamilySpec) -> Result<FamilyGraph, GraphError> {
    let (mut graph, anchors, mut roles) = match spec.family {
        Family::G => {
            let g = super::path(7)?;
            let roles = vec![
                VertexRole::Anchor(0),
                VertexRole::Core(0),
                VertexRole::Core(1),
                VertexRole::Anchor(1),
                VertexRole::Core(2),
                VertexRole::Core(3),
                VertexRole::Anchor(2),
            ];
            (g, [0, 3, 6], roles)
        }
        Family::H => {
            let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)])?;
            let roles = vec![
                VertexRole::Anchor(0),
                VertexRole::Core(0),
                VertexRole::Core(1),
                VertexRole::Anchor(2),
                VertexRole::Anchor(1),
            ];
            (g, [0, 4, 3], roles)
        }
    };
    let leaves = spec.leaves();
    let paths = spec.pendant_paths();
    for i in 0..3 {
        for _ in 0..leaves[i] {
            let w = graph.add_vertex();
            graph.add_edge(anchors[i], w)?;
            roles.push(VertexRole::Leaf(i));
        }
        for _ in 0..paths[i] {
            let y = graph.add_vertex();
            let z = graph.add_vertex();
            graph.add_edge(anchors[i], y)?;
            graph.add_edge(y, z)?;
            roles.push(VertexRole::PathNear(i));
            roles.push(VertexRole::PathFar(i));
        }
    }
    debug_assert_eq!(graph.order(), spec.order());
    Ok(FamilyGraph {
        spec: *spec,
        graph,
        anchors,
        roles,
    })
}

/// The conjectured/proved minimizer `G_{m,l}` for order `n = 6m + l`, `n >= 12`.
pub fn predicted_extremal(n: usize) -> Result<FamilySpec, GraphError> {
    if n < 12 {
        return Err(GraphError::Unsupported(format!(
            "the six-case extremal pattern starts at n = 12, got {n}"
        )));
    }
    let m = n / 6;
    Ok(match n % 6 {
        0 => FamilySpec::g(1, 0, 0, m - 1, m - 2, m - 1),
        1 => FamilySpec::g(1, 0, 1, m - 1, m - 2, m - 1),
        2 => FamilySpec::g(1, 0, 0, m - 1, m - 2, m),
        3 => FamilySpec::g(0, 0, 0, m, m - 2, m),
        4 => FamilySpec::g(0, 1, 0, m, m - 2, m),
        _ => FamilySpec::g(0, 0, 0, m, m - 1, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formula_exhaustive() {
        for family in [Family::G, Family::H] {
            for a in 0..=10 {
                for b in 0..=10 {
                    for c in 0..=10 {
                        for (p, q, r) in [(0, 0, 0), (a, b, c), (10 - a, b, 10 - c), (c, a, b)] {
                            let spec = FamilySpec {
                                family,
                                a,
                                b,
                                c,
                                p,
                                q,
                                r,
                            };
                            let fg = build_family(&spec).unwrap();
                            let core = if family == Family::G { 7 } else { 5 };
                            assert_eq!(fg.graph.order(), core + a + b + c + 2 * (p + q + r));
                            assert_eq!(fg.roles.len(), fg.graph.order());
                            assert!(fg.graph.is_tree());
                            for (i, &v) in fg.anchors.iter().enumerate() {
                                assert_eq!(fg.graph.degree(v), spec.anchor_degrees()[i]);
                            }
                            assert_eq!(fg.graph.max_degree(), spec.max_degree());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spec_strings() {
        let s: FamilySpec = "G(1,0,0;6,5,6)".parse().unwrap();
        assert_eq!(s, FamilySpec::g(1, 0, 0, 6, 5, 6));
        assert_eq!(s.to_string(), "G(1,0,0;6,5,6)");
        assert_eq!(s.order(), 42);
        assert!("G(1,0,0;6,5)".parse::<FamilySpec>().is_err());
        assert!("X(1,0,0;6,5,6)".parse::<FamilySpec>().is_err());
        assert_eq!(
            " H( 0,0,0 ; 0,1,0 )".parse::<FamilySpec>().unwrap(),
            FamilySpec::h(0, 0, 0, 0, 1, 0)
        );
    }

    #[test]
    fn smallest_h_with_middle_path() {
        let fg = build_family(&FamilySpec::h(0, 0, 0, 0, 1, 0)).unwrap();
        assert_eq!(fg.graph.order(), 7);
        assert_eq!(fg.graph.degree(fg.anchors[1]), 2);
        assert_eq!(fg.graph.degree(1), 3);
    }

    #[test]
    fn predicted_table() {
        assert_eq!(
            predicted_extremal(42).unwrap(),
            FamilySpec::g(1, 0, 0, 6, 5, 6)
        );
        assert_eq!(
            predicted_extremal(41).unwrap(),
            FamilySpec::g(0, 0, 0, 6, 5, 6)
        );
        assert_eq!(
            predicted_extremal(39).unwrap(),
            FamilySpec::g(0, 0, 0, 6, 4, 6)
        );
        assert!(predicted_extremal(11).is_err());
        for n in 12..200 {
            assert_eq!(predicted_extremal(n).unwrap().order(), n);
        }
    }
}
