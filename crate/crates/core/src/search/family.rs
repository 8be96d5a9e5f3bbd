//! Minimization over the two three-anchor families for large orders.

use std::cmp::{Ordering, Reverse};
use std::collections::HashSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{canonical_form, SearchError};
use crate::dissociation::diss_tree_dp;
use crate::graph::{build_family, encode_graph6, Family, FamilySpec};
use crate::reduced::{compare_family_rho, solve_rho_reduced, MIN_REDUCED_ORDER};

/// Largest allowed spread of the balanced anchor loads.
const BALANCE_SLACK: usize = 2;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyCandidate {
    pub spec: FamilySpec,
    pub rho: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySearchResult {
    pub n: usize,
    pub psi: usize,
    pub winner: FamilySpec,
    pub winner_rho: f64,
    pub winner_g6: String,
    /// Non-isomorphic specs whose radius equals the winner's exactly.
    pub ties: Vec<FamilySpec>,
    /// Smallest-radius `H` candidate, if any survived the filters.
    pub best_h: Option<FamilyCandidate>,
    pub h_wins: bool,
    /// All candidates in increasing radius order.
    pub ranked: Vec<FamilyCandidate>,
    pub candidates_examined: usize,
    pub exact_comparisons: usize,
    pub wall_time_secs: f64,
}

fn balanced(loads: [usize; 3]) -> bool {
    let max = loads.iter().max().copied().unwrap_or(0);
    let min = loads.iter().min().copied().unwrap_or(0);
    max - min <= BALANCE_SLACK
}

/// Balanced family specs of order `n` with dissociation number `n - 3`, one
/// per isomorphism class.
pub fn family_candidates(n: usize) -> Result<Vec<FamilySpec>, SearchError> {
    let mut specs = Vec::new();
    for family in [Family::G, Family::H] {
        let core = if family == Family::G { 7 } else { 5 };
        for a in 0..=1 {
            for b in 0..=1 {
                for c in 0..=1 {
                    let Some(rest) = n.checked_sub(core + a + b + c) else {
                        continue;
                    };
                    if rest % 2 != 0 {
                        continue;
                    }
                    let total = rest / 2;
                    for p in 0..=total {
                        for q in 0..=total - p {
                            let r = total - p - q;
                            let spec = FamilySpec {
                                family,
                                a,
                                b,
                                c,
                                p,
                                q,
                                r,
                            };
                            let ok = match family {
                                Family::G => balanced([p + a, q + b + 1, r + c]),
                                Family::H => q >= 1 && balanced([p + a, q + b, r + c]),
                            };
                            if ok {
                                specs.push(spec);
                            }
                        }
                    }
                }
            }
        }
    }
    // Within an isomorphism class keep the spec with the most leaves at the
    // first anchors, so mirrored specs are reported as `G(1,0,0;...)` rather
    // than `G(0,0,1;...)`.
    specs.sort_by_key(|s| (s.family, Reverse((s.a, s.b, s.c)), s.p, s.q, s.r));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for spec in specs {
        let g = build_family(&spec)?.graph;
        if diss_tree_dp(&g)? + 3 != n {
            continue;
        }
        if seen.insert(canonical_form(&g)?) {
            out.push(spec);
        }
    }
    Ok(out)
}

/// Finds the family graph of order `n >= 14` with dissociation number `n - 3`
/// and smallest spectral radius.
pub fn family_search(n: usize) -> Result<FamilySearchResult, SearchError> {
    if n < MIN_REDUCED_ORDER {
        return Err(SearchError::InvalidParameter(format!(
            "family search needs n >= {MIN_REDUCED_ORDER}, got {n}"
        )));
    }
    let start = Instant::now();
    let specs = family_candidates(n)?;
    if specs.is_empty() {
        return Err(SearchError::NoCandidates {
            n,
            psi: n - 3,
            origin: "family specs".into(),
        });
    }
    let mut ranked = specs
        .iter()
        .map(|s| {
            Ok(FamilyCandidate {
                spec: *s,
                rho: solve_rho_reduced(s)?,
            })
        })
        .collect::<Result<Vec<_>, SearchError>>()?;

    let mut exact_comparisons = 0;
    let mut err = None;
    let mut cmp = |x: &FamilyCandidate, y: &FamilyCandidate| -> Ordering {
        match compare_family_rho(&x.spec, x.rho, &y.spec, y.rho) {
            Ok(c) => {
                exact_comparisons += usize::from(c.exact);
                c.order
            }
            Err(e) => {
                err = Some(e);
                Ordering::Equal
            }
        }
    };
    ranked.sort_by(|x, y| cmp(x, y).then_with(|| x.spec.cmp(&y.spec)));
    let ties: Vec<FamilySpec> = ranked[1..]
        .iter()
        .filter(|c| cmp(&ranked[0], c) == Ordering::Equal)
        .map(|c| c.spec)
        .collect();
    if let Some(e) = err {
        return Err(e.into());
    }
    let winner = ranked[0].clone();
    let best_h = ranked.iter().find(|c| c.spec.family == Family::H).cloned();
    let h_wins = winner.spec.family == Family::H || ties.iter().any(|s| s.family == Family::H);
    Ok(FamilySearchResult {
        n,
        psi: n - 3,
        winner: winner.spec,
        winner_rho: winner.rho,
        winner_g6: encode_graph6(&build_family(&winner.spec)?.graph),
        ties,
        best_h,
        h_wins,
        candidates_examined: ranked.len(),
        ranked,
        exact_comparisons,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
