//! Characteristic polynomials of the shifted reduced matrices for the
//! candidate graphs of each residue class `n mod 6`, with their audits.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{a_matrix, compare_family_rho, solve_rho_reduced, ReducedError};
use crate::graph::FamilySpec;
use crate::spectral::char_sym3;

pub type CoeffFn = fn(f64) -> f64;

/// One candidate: `det(lambda I - A(t))` for the parameters
/// `(a, b, c, m1, m2, m3)` and its closed form
/// `c3(t) lambda^3 + c2(t) lambda^2 + c1(t) lambda + c0(t)`.
#[derive(Debug, Clone, Copy)]
pub struct CasePolyEntry {
    /// `1..=6`; the entry belongs to orders `n = 6m + case_id - 1`.
    pub case_id: u8,
    pub label: &'static str,
    pub params: [i64; 6],
    /// `[c3, c2, c1, c0]`.
    pub coeffs: [CoeffFn; 4],
}

impl CasePolyEntry {
    pub fn closed_form(&self, lambda: f64, t: f64) -> f64 {
        let [c3, c2, c1, c0] = self.coeffs;
        ((c3(t) * lambda + c2(t)) * lambda + c1(t)) * lambda + c0(t)
    }

    pub fn determinant(&self, lambda: f64, t: f64) -> f64 {
        let [a, b, c, m1, m2, m3] = self.params;
        char_sym3(&a_matrix(a, b, c, m1, m2, m3, t), lambda)
    }

    /// `n mod 6` for the orders this entry applies to.
    pub fn residue(&self) -> usize {
        self.case_id as usize - 1
    }

    /// `G(a,b,c; m+m1, m+m2, m+m3)`, or `None` if a parameter is negative.
    pub fn spec_for(&self, m: usize) -> Option<FamilySpec> {
        let [a, b, c, m1, m2, m3] = self.params;
        let shift = |k: i64| usize::try_from(m as i64 + k).ok();
        Some(FamilySpec::g(
            a as usize,
            b as usize,
            c as usize,
            shift(m1)?,
            shift(m2)?,
            shift(m3)?,
        ))
    }
}

macro_rules! entry {
    ($case:expr, $label:expr, [$($p:expr),*], |$t:ident| [$c3:expr, $c2:expr, $c1:expr, $c0:expr]) => {
        CasePolyEntry {
            case_id: $case,
            label: $label,
            params: [$($p),*],
            coeffs: [|$t| $c3, |$t| $c2, |$t| $c1, |$t| $c0],
        }
    };
}

/// All 33 entries. Labels `f1..f7` and `g1..g10` follow the usual naming;
/// unnamed entries are labelled `case.index`.
pub fn case_table() -> Vec<CasePolyEntry> {
    #[allow(unused_variables)]
    let table = vec![
        entry!(1, "f1", [1, 0, 0, -1, -2, -1], |t| [
            1.0,
            2.0 * t + 1.0 / t,
            t * t,
            -1.0 / t
        ]),
        entry!(1, "f2", [0, 1, 0, -1, -2, -1], |t| [
            1.0,
            2.0 * t + 1.0 / t,
            t * t,
            -t
        ]),
        entry!(1, "f3", [0, 1, 0, -1, -3, 0], |t| [
            1.0,
            2.0 * t + 1.0 / t,
            t * t - 1.0,
            -t
        ]),
        entry!(1, "f4", [1, 0, 0, -2, -2, 0], |t| [
            1.0,
            2.0 * t + 1.0 / t,
            t * t - 1.0,
            -t - 1.0 / t
        ]),
        entry!(1, "f5", [1, 0, 0, -2, -1, -1], |t| [
            1.0,
            2.0 * t + 1.0 / t,
            t * t - 1.0,
            -2.0 * t - 1.0 / t
        ]),
        entry!(1, "f6", [1, 1, 1, -1, -3, -1], |t| [
            1.0,
            t + 3.0 / t,
            3.0 / (t * t),
            -1.0 / t + 1.0 / (t * t * t)
        ]),
        entry!(1, "f7", [1, 1, 1, -2, -2, -1], |t| [
            1.0,
            t + 3.0 / t,
            3.0 / (t * t),
            -t - 1.0 / t + 1.0 / (t * t * t)
        ]),
        entry!(2, "g1", [1, 0, 1, -1, -2, -1], |t| [
            1.0,
            t + 2.0 / t,
            1.0 / (t * t),
            -1.0 / t
        ]),
        entry!(2, "2.2", [1, 0, 1, -2, -1, -1], |t| [
            1.0,
            t + 2.0 / t,
            1.0 / (t * t) - 1.0,
            -t - 2.0 / t
        ]),
        entry!(2, "2.3", [1, 1, 0, -1, -2, -1], |t| [
            1.0,
            t + 2.0 / t,
            1.0 / (t * t),
            -t
        ]),
        entry!(2, "2.4", [1, 1, 0, -2, -2, 0], |t| [
            1.0,
            t + 2.0 / t,
            1.0 / (t * t) - 1.0,
            -1.0 / t - t
        ]),
        entry!(2, "g2", [0, 0, 0, -1, -2, 0], |t| [
            1.0,
            2.0 * t,
            t * t - 2.0,
            -t
        ]),
        entry!(2, "2.6", [0, 0, 0, -1, -1, -1], |t| [
            1.0,
            2.0 * t,
            t * t - 2.0,
            -2.0 * t
        ]),
        entry!(3, "g3", [1, 0, 0, -1, -2, 0], |t| [
            1.0,
            t + 1.0 / t,
            -1.0,
            -1.0 / t
        ]),
        entry!(3, "3.2", [0, 1, 0, -1, -2, 0], |t| [
            1.0,
            t + 1.0 / t,
            -1.0,
            -t
        ]),
        entry!(3, "3.3", [1, 0, 0, -1, -1, -1], |t| [
            1.0,
            t + 1.0 / t,
            -1.0,
            -t - 1.0 / t
        ]),
        entry!(3, "3.4", [1, 1, 1, -1, -2, -1], |t| [
            1.0,
            3.0 / t,
            3.0 / (t * t) - 2.0,
            -2.0 / t + 1.0 / (t * t * t)
        ]),
        entry!(3, "g4", [0, 1, 0, 0, -3, 0], |t| [
            1.0,
            t + 1.0 / t,
            -2.0,
            0.0
        ]),
        entry!(3, "3.6", [1, 0, 0, -2, -1, 0], |t| [
            1.0,
            t + 1.0 / t,
            -2.0,
            -t - 1.0 / t
        ]),
        entry!(4, "g5", [0, 0, 0, 0, -2, 0], |t| [1.0, t, -2.0, 0.0]),
        entry!(4, "4.2", [0, 0, 0, -1, -1, 0], |t| [1.0, t, -2.0, -t]),
        entry!(4, "g6", [1, 1, 0, -1, -2, 0], |t| [
            1.0,
            2.0 / t,
            1.0 / (t * t) - 2.0,
            -1.0 / t
        ]),
        entry!(4, "4.4", [1, 0, 1, -1, -1, -1], |t| [
            1.0,
            2.0 / t,
            1.0 / (t * t) - 2.0,
            -2.0 / t
        ]),
        entry!(5, "g7", [0, 1, 0, 0, -2, 0], |t| [1.0, 1.0 / t, -2.0, 0.0]),
        entry!(5, "5.2", [1, 0, 0, -1, -1, 0], |t| [
            1.0,
            1.0 / t,
            -2.0,
            -1.0 / t
        ]),
        entry!(5, "g8", [1, 1, 1, 0, -2, -1], |t| [
            1.0,
            3.0 / t - t,
            3.0 / (t * t) - 4.0,
            t - 3.0 / t + 1.0 / (t * t * t)
        ]),
        entry!(5, "5.4", [1, 1, 1, -1, -1, -1], |t| [
            1.0,
            3.0 / t - t,
            3.0 / (t * t) - 4.0,
            -3.0 / t + 1.0 / (t * t * t)
        ]),
        entry!(6, "g9", [0, 0, 0, 0, -1, 0], |t| [1.0, 0.0, -2.0, 0.0]),
        entry!(6, "g10", [1, 1, 0, 0, -2, 0], |t| [
            1.0,
            2.0 / t - t,
            1.0 / (t * t) - 3.0,
            t - 1.0 / t
        ]),
        entry!(6, "6.3", [1, 0, 1, -1, 0, -1], |t| [
            1.0,
            2.0 / t - t,
            1.0 / (t * t) - 4.0,
            -3.0 / t
        ]),
        entry!(6, "6.4", [1, 0, 1, 0, -1, -1], |t| [
            1.0,
            2.0 / t - t,
            1.0 / (t * t) - 3.0,
            t - 2.0 / t
        ]),
        entry!(6, "6.5", [1, 1, 0, -1, -1, 0], |t| [
            1.0,
            2.0 / t - t,
            1.0 / (t * t) - 3.0,
            -1.0 / t
        ]),
        entry!(6, "6.6", [1, 1, 0, -1, -2, 1], |t| [
            1.0,
            2.0 / t - t,
            1.0 / (t * t) - 4.0,
            t - 2.0 / t
        ]),
    ];
    table
}

/// One audited point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseSample {
    pub lambda: f64,
    pub t: f64,
    pub determinant: f64,
    pub closed_form: f64,
    pub rel_err: f64,
}

/// Result of auditing one entry. `status` is `PASS` or `FAIL`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub entry: String,
    pub case_id: u8,
    pub samples: usize,
    pub max_rel_err: f64,
    pub status: String,
    pub worst: CaseSample,
    pub first_failure: Option<CaseSample>,
}

pub const CASE_TOLERANCE: f64 = 1e-9;

/// Low-discrepancy point `k` of `[-3, 3] x [2, 6]`.
fn sample_point(k: usize) -> (f64, f64) {
    // Additive recurrence with the reciprocal powers of the plastic number.
    const G: f64 = 1.324_717_957_244_746;
    let (a1, a2) = (1.0 / G, 1.0 / (G * G));
    let x = k as f64 + 0.5;
    (-3.0 + 6.0 * (x * a1).fract(), 2.0 + 4.0 * (x * a2).fract())
}

/// Compares the closed form with the 3x3 determinant at `samples` points.
pub fn verify_case_poly(entry: &CasePolyEntry, samples: usize) -> Result<CaseReport, ReducedError> {
    if samples == 0 {
        return Err(ReducedError::InvalidParameter(
            "need at least one sample".into(),
        ));
    }
    let points: Vec<CaseSample> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let (lambda, t) = sample_point(k);
            let determinant = entry.determinant(lambda, t);
            let closed_form = entry.closed_form(lambda, t);
            let scale = 1f64.max(determinant.abs()).max(closed_form.abs());
            let rel_err = (determinant - closed_form).abs() / scale;
            CaseSample {
                lambda,
                t,
                determinant,
                closed_form,
                rel_err,
            }
        })
        .collect();
    let worst = *points
        .iter()
        .max_by(|a, b| a.rel_err.total_cmp(&b.rel_err))
        .expect("at least one sample");
    let first_failure = points
        .iter()
        .find(|s| !(s.rel_err <= CASE_TOLERANCE))
        .copied();
    Ok(CaseReport {
        entry: entry.label.to_string(),
        case_id: entry.case_id,
        samples,
        max_rel_err: worst.rel_err,
        status: if first_failure.is_none() {
            "PASS"
        } else {
            "FAIL"
        }
        .to_string(),
        worst,
        first_failure,
    })
}

/// Smallest value of `f_i - f_{i+1}` over the grid for each link of the
/// chains `f1 > ... > f5` and `f6 > f7`.
pub fn chain_margins(lambdas: &[f64], ts: &[f64]) -> Vec<(String, f64)> {
    let table = case_table();
    let get = |label: &str| {
        *table
            .iter()
            .find(|e| e.label == label)
            .expect("label in table")
    };
    let links = [
        ("f1", "f2"),
        ("f2", "f3"),
        ("f3", "f4"),
        ("f4", "f5"),
        ("f6", "f7"),
    ];
    links
        .iter()
        .map(|&(hi, lo)| {
            let (eh, el) = (get(hi), get(lo));
            let mut min = f64::INFINITY;
            for &l in lambdas {
                for &t in ts {
                    min = min.min(eh.closed_form(l, t) - el.closed_form(l, t));
                }
            }
            (format!("{hi}>{lo}"), min)
        })
        .collect()
}

/// A candidate graph with its reduced spectral radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedCandidate {
    pub label: String,
    pub spec: FamilySpec,
    pub rho: f64,
}

/// Which candidate of the residue class of `n` has the smallest radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub n: usize,
    pub case_id: u8,
    pub m: usize,
    /// Candidates in increasing order of radius.
    pub ranked: Vec<RankedCandidate>,
    pub winner: FamilySpec,
    pub winner_label: String,
    /// Candidates whose radius equals the winner's exactly.
    pub ties: Vec<FamilySpec>,
    pub exact_comparisons: usize,
}

/// Minimum-radius candidate among the case-table entries for order `n >= 39`.
pub fn case_winner(n: usize) -> Result<CaseOutcome, ReducedError> {
    if n < 39 {
        return Err(ReducedError::InvalidParameter(format!(
            "case analysis needs n >= 39, got {n}"
        )));
    }
    let (m, residue) = (n / 6, n % 6);
    let mut ranked: Vec<RankedCandidate> = Vec::new();
    for e in case_table().into_iter().filter(|e| e.residue() == residue) {
        let spec = e.spec_for(m).ok_or_else(|| {
            ReducedError::InvalidParameter(format!(
                "entry {} has negative parameters at m = {m}",
                e.label
            ))
        })?;
        debug_assert_eq!(spec.order(), n);
        ranked.push(RankedCandidate {
            label: e.label.to_string(),
            spec,
            rho: solve_rho_reduced(&spec)?,
        });
    }
    ranked.sort_by(|a, b| a.rho.total_cmp(&b.rho));
    let mut best = 0;
    let mut exact_comparisons = 0;
    for i in 1..ranked.len() {
        let cmp = compare_family_rho(
            &ranked[i].spec,
            ranked[i].rho,
            &ranked[best].spec,
            ranked[best].rho,
        )?;
        exact_comparisons += cmp.exact as usize;
        if cmp.order == Ordering::Less {
            best = i;
        }
    }
    let mut ties = Vec::new();
    for (i, c) in ranked.iter().enumerate() {
        if i != best {
            let cmp = compare_family_rho(&c.spec, c.rho, &ranked[best].spec, ranked[best].rho)?;
            if cmp.order == Ordering::Equal {
                ties.push(c.spec);
            }
        }
    }
    Ok(CaseOutcome {
        n,
        case_id: residue as u8 + 1,
        m,
        winner: ranked[best].spec,
        winner_label: ranked[best].label.clone(),
        ranked,
        ties,
        exact_comparisons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::predicted_extremal;

    #[test]
    fn table_shape() {
        let table = case_table();
        assert_eq!(table.len(), 33);
        let per_case: Vec<usize> = (1..=6)
            .map(|k| table.iter().filter(|e| e.case_id == k).count())
            .collect();
        assert_eq!(per_case, vec![7, 6, 6, 4, 4, 6]);
        for e in &table {
            for m in 3..10 {
                let spec = e.spec_for(m).unwrap();
                assert_eq!(spec.order(), 6 * m + e.residue(), "{}", e.label);
            }
        }
    }

    #[test]
    fn f1_at_one_two() {
        let f1 = case_table()[0];
        assert_eq!(f1.closed_form(1.0, 2.0), 9.0);
        assert!((f1.determinant(1.0, 2.0) - 9.0).abs() < 1e-12);
    }

    #[test]
    fn corrupted_entry_fails_immediately() {
        let mut e = case_table()[0];
        e.coeffs[3] = |t| 1.0 / t;
        let report = verify_case_poly(&e, 100).unwrap();
        assert_eq!(report.status, "FAIL");
        assert_eq!(report.first_failure.unwrap().lambda, sample_point(0).0);
    }

    #[test]
    fn winners_follow_the_pattern() {
        for n in [41, 42, 45] {
            let out = case_winner(n).unwrap();
            assert_eq!(out.winner, predicted_extremal(n).unwrap(), "n = {n}");
            assert!(out.ties.is_empty());
        }
        assert!(case_winner(38).is_err());
    }
}
