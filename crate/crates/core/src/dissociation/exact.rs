//! Branch and bound for the dissociation number on graphs with at most 64
//! vertices (the public entry points cap the order at [`MAX_EXACT_ORDER`]).

use super::{DissError, DissociationCertificate};
use crate::graph::Graph;

pub const MAX_EXACT_ORDER: usize = 40;

struct Bnb {
    adj: Vec<u64>,
    /// Branching order.
    order: Vec<usize>,
    best: usize,
    best_set: Option<u64>,
    /// Stop as soon as a set larger than `best` is found.
    first_only: bool,
    done: bool,
}

impl Bnb {
    fn new(g: &Graph, order: Vec<usize>) -> Self {
        let adj = (0..g.order()).map(|v| g.neighbor_word(v)).collect();
        Bnb {
            adj,
            order,
            best: 0,
            best_set: None,
            first_only: false,
            done: false,
        }
    }

    /// `v` may join `inc` iff it sees at most one member, and that member is
    /// currently unmatched.
    #[inline]
    fn addable(&self, v: usize, inc: u64) -> bool {
        let nb = self.adj[v] & inc;
        match nb.count_ones() {
            0 => true,
            1 => self.adj[nb.trailing_zeros() as usize] & inc == 0,
            _ => false,
        }
    }

    fn prune_candidates(&self, inc: u64, cand: u64) -> u64 {
        let mut out = cand;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !self.addable(v, inc) {
                out &= !(1 << v);
            }
        }
        out
    }

    /// Upper bound on how many candidates can still be added.
    fn bound(&self, inc: u64, cand: u64) -> usize {
        let mut avail = cand;
        let mut total = 0;
        // A still-unmatched member accepts at most one more neighbour.
        let mut members = inc;
        while members != 0 {
            let u = members.trailing_zeros() as usize;
            members &= members - 1;
            let group = self.adj[u] & avail;
            if group.count_ones() >= 2 {
                total += 1;
                avail &= !group;
            }
        }
        // Any connected triple of candidates loses at least one vertex.
        let mut rest = avail;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if avail & (1 << v) == 0 {
                continue;
            }
            let nb = self.adj[v] & avail;
            let triple = if nb.count_ones() >= 2 {
                let a = nb.trailing_zeros();
                let b = (nb & (nb - 1)).trailing_zeros();
                Some((1u64 << v) | (1 << a) | (1 << b))
            } else if nb.count_ones() == 1 {
                let a = nb.trailing_zeros() as usize;
                let nb2 = self.adj[a] & avail & !(1 << v);
                (nb2 != 0).then(|| (1u64 << v) | (1 << a) | (1 << nb2.trailing_zeros()))
            } else {
                None
            };
            if let Some(t) = triple {
                total += 2;
                avail &= !t;
            }
        }
        total + avail.count_ones() as usize
    }

    fn search(&mut self, pos: usize, inc: u64, cand: u64) {
        if self.done {
            return;
        }
        let size = inc.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.best_set = Some(inc);
            if self.first_only {
                self.done = true;
                return;
            }
        }
        if cand == 0 || size + self.bound(inc, cand) <= self.best {
            return;
        }
        let mut pos = pos;
        while cand & (1 << self.order[pos]) == 0 {
            pos += 1;
        }
        let v = self.order[pos];
        let without = cand & !(1 << v);
        let inc_v = inc | (1 << v);
        self.search(pos + 1, inc_v, self.prune_candidates(inc_v, without));
        self.search(pos + 1, inc, without);
    }
}

fn check_order(g: &Graph) -> Result<(), DissError> {
    if g.order() > MAX_EXACT_ORDER {
        Err(DissError::TooLarge {
            order: g.order(),
            limit: MAX_EXACT_ORDER,
        })
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn greedy(g: &Graph, bnb: &Bnb) -> u64 {
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut inc = 0u64;
    for v in by_degree {
        if bnb.addable(v, inc) {
            inc |= 1 << v;
        }
    }
    inc
}

/// The dissociation number without a witness.
pub fn diss_number(g: &Graph) -> Result<usize, DissError> {
    check_order(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut bnb = Bnb::new(g, order);
    let start = greedy(g, &bnb);
    bnb.best = start.count_ones() as usize;
    bnb.best_set = Some(start);
    bnb.search(0, 0, full_mask(n));
    Ok(bnb.best)
}

/// The dissociation number with the lexicographically smallest maximum set.
pub fn diss_exact(g: &Graph) -> Result<(usize, DissociationCertificate), DissError> {
    let opt = diss_number(g)?;
    let n = g.order();
    let set: Vec<usize> = if opt == 0 {
        Vec::new()
    } else {
        // Include-first depth-first search in index order meets maximum sets in
        // increasing lexicographic order, so the first one of size `opt` wins.
        let mut bnb = Bnb::new(g, (0..n).collect());
        bnb.best = opt - 1;
        bnb.first_only = true;
        bnb.search(0, 0, full_mask(n));
        let mask = bnb.best_set.expect("a maximum set exists");
        (0..n).filter(|&v| mask >> v & 1 == 1).collect()
    };
    let cert = DissociationCertificate::new(g, &set).expect("search only builds dissociation sets");
    debug_assert_eq!(cert.size, opt);
    Ok((opt, cert))
}
