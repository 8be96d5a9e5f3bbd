//! The 3x3 reduction of the eigenvalue equation for family graphs.
//!
//! Eliminating every non-anchor vertex of `G(a,b,c;p,q,r)` or
//! `H(a,b,c;p,q,r)` from `A x = t x` leaves a symmetric system
//! `t (t^2 - 1) x = B(t) x` on the three anchor values. The spectral radius of
//! the graph is the largest root of `t (t^2 - 1) = lambda_1(B(t))`.

mod cases;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_family, Family, FamilySpec, Graph, VertexRole};
use crate::spectral::{
    compare_largest_roots, eigvec_sym3, lambda1_sym3, IntPolynomial, Mat3, SpectralError,
};

pub use cases::{
    case_table, case_winner, chain_margins, verify_case_poly, CaseOutcome, CasePolyEntry,
    CaseReport, CaseSample, RankedCandidate, CASE_TOLERANCE,
};

/// Smallest order for which the reduced model is used.
pub const MIN_REDUCED_ORDER: usize = 14;
/// Floating margin below which radii are compared exactly.
pub const EXACT_MARGIN: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReducedError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("expected a {expected:?}-family spec, got {got}")]
    WrongFamily { expected: Family, got: FamilySpec },
    #[error(
        "{spec} has order {order}; the reduced model is only used for n >= {MIN_REDUCED_ORDER}"
    )]
    TooSmall { spec: FamilySpec, order: usize },
    #[error(
        "no sign change of the fixed-point gap on (2, {hi}]: g(2) = {g_lo:e}, g({hi}) = {g_hi:e}"
    )]
    NoSignChange { hi: f64, g_lo: f64, g_hi: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

const E1: Mat3 = [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]];

fn check_t(t: f64) -> Result<(), ReducedError> {
    if t > 1.0 {
        Ok(())
    } else {
        Err(ReducedError::Domain(format!("t must exceed 1, got {t}")))
    }
}

fn diag_term(k: usize, leaves: usize, t: f64) -> f64 {
    k as f64 * t - leaves as f64 / t
}

/// `B_1(t)` for a `G` spec.
pub fn b1_matrix(t: f64, spec: &FamilySpec) -> Result<Mat3, ReducedError> {
    if spec.family != Family::G {
        return Err(ReducedError::WrongFamily {
            expected: Family::G,
            got: *spec,
        });
    }
    check_t(t)?;
    let mut m = E1;
    m[0][0] = diag_term(spec.p + spec.a + 1, spec.a, t);
    m[1][1] = diag_term(spec.q + spec.b + 2, spec.b, t);
    m[2][2] = diag_term(spec.r + spec.c + 1, spec.c, t);
    Ok(m)
}

/// `B_2(t)` for an `H` spec.
pub fn b2_matrix(t: f64, spec: &FamilySpec) -> Result<Mat3, ReducedError> {
    if spec.family != Family::H {
        return Err(ReducedError::WrongFamily {
            expected: Family::H,
            got: *spec,
        });
    }
    check_t(t)?;
    Ok([
        [diag_term(spec.p + spec.a + 1, spec.a, t), t, 1.0],
        [t, diag_term(spec.q + spec.b + 1, spec.b, t), 1.0],
        [1.0, 1.0, diag_term(spec.r + spec.c + 1, spec.c, t)],
    ])
}

/// `B_1` or `B_2` according to the family.
pub fn b_matrix(t: f64, spec: &FamilySpec) -> Result<Mat3, ReducedError> {
    match spec.family {
        Family::G => b1_matrix(t, spec),
        Family::H => b2_matrix(t, spec),
    }
}

/// `diag((m1+a)t - a/t, (m2+b+1)t - b/t, (m3+c)t - c/t) + E_1`, the part of
/// `B_1(t; a,b,c; m+m1, m+m2, m+m3)` left after removing `t(m+1) I`.
pub fn a_matrix(a: i64, b: i64, c: i64, m1: i64, m2: i64, m3: i64, t: f64) -> Mat3 {
    let d = |k: i64, leaves: i64| k as f64 * t - leaves as f64 / t;
    let mut m = E1;
    m[0][0] = d(m1 + a, a);
    m[1][1] = d(m2 + b + 1, b);
    m[2][2] = d(m3 + c, c);
    m
}

/// `g(t) = t (t^2 - 1) - lambda_1(B(t))`.
pub fn fixed_point_gap(spec: &FamilySpec, t: f64) -> Result<f64, ReducedError> {
    Ok(t * (t * t - 1.0) - lambda1_sym3(&b_matrix(t, spec)?))
}

/// Spectral radius of the family graph as the largest root of the fixed-point
/// gap on `(2, 1 + max degree]`.
pub fn solve_rho_reduced(spec: &FamilySpec) -> Result<f64, ReducedError> {
    let order = spec.order();
    if order < MIN_REDUCED_ORDER {
        return Err(ReducedError::TooSmall { spec: *spec, order });
    }
    let upper = 1.0 + spec.max_degree() as f64;
    let g = |t: f64| fixed_point_gap(spec, t);
    let g_upper = g(upper)?;
    let no_change = |g_lo: f64| ReducedError::NoSignChange {
        hi: upper,
        g_lo,
        g_hi: g_upper,
    };
    if g_upper <= 0.0 {
        return Err(no_change(g(2.0)?));
    }
    let mut hi = upper;
    let mut lo = (hi - 0.25).max(2.0);
    loop {
        if g(lo)? <= 0.0 {
            break;
        }
        if lo <= 2.0 {
            return Err(no_change(g(2.0)?));
        }
        hi = lo;
        lo = (lo - 0.25).max(2.0);
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `det((t^4 - t^2) I - t B(t))`: an integer polynomial whose largest real
/// root is the spectral radius of the family graph (for `n >= 14`).
pub fn reduced_char_poly(spec: &FamilySpec) -> IntPolynomial {
    let poly = |c: &[i64]| IntPolynomial::from_i64s(c);
    let diag = |k: usize, leaves: usize| poly(&[leaves as i64, 0, -1 - k as i64, 0, 1]);
    let (k2, off01) = match spec.family {
        Family::G => (spec.q + spec.b + 2, poly(&[0, -1])),
        Family::H => (spec.q + spec.b + 1, poly(&[0, 0, -1])),
    };
    let off02 = match spec.family {
        Family::G => IntPolynomial::zero(),
        Family::H => poly(&[0, -1]),
    };
    let off12 = poly(&[0, -1]);
    let m = [
        [
            diag(spec.p + spec.a + 1, spec.a),
            off01.clone(),
            off02.clone(),
        ],
        [off01, diag(k2, spec.b), off12.clone()],
        [off02, off12, diag(spec.r + spec.c + 1, spec.c)],
    ];
    let minor =
        |i: usize, j: usize, k: usize, l: usize| &(&m[i][k] * &m[j][l]) - &(&m[i][l] * &m[j][k]);
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// Result of comparing the spectral radii of two family graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoComparison {
    #[serde(with = "ordering_serde")]
    pub order: Ordering,
    /// Whether the floating margin was below [`EXACT_MARGIN`] and the exact
    /// polynomial comparison decided.
    pub exact: bool,
}

mod ordering_serde {
    use std::cmp::Ordering;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match o {
            Ordering::Less => "LT",
            Ordering::Equal => "EQ",
            Ordering::Greater => "GT",
        })
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ordering, D::Error> {
        match String::deserialize(d)?.as_str() {
            "LT" => Ok(Ordering::Less),
            "EQ" => Ok(Ordering::Equal),
            "GT" => Ok(Ordering::Greater),
            other => Err(serde::de::Error::custom(format!("bad ordering {other:?}"))),
        }
    }
}

/// Orders two family graphs by spectral radius given their reduced radii.
pub fn compare_family_rho(
    s1: &FamilySpec,
    rho1: f64,
    s2: &FamilySpec,
    rho2: f64,
) -> Result<RhoComparison, ReducedError> {
    if (rho1 - rho2).abs() >= EXACT_MARGIN {
        return Ok(RhoComparison {
            order: rho1.total_cmp(&rho2),
            exact: false,
        });
    }
    let order = compare_largest_roots(&reduced_char_poly(s1), &reduced_char_poly(s2))?;
    Ok(RhoComparison { order, exact: true })
}

/// Values on every vertex class of a family graph, derived from the anchors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronExtension {
    /// Anchor values.
    pub x: [f64; 3],
    /// Near vertex of a pendant two-path at each anchor.
    pub y: [f64; 3],
    /// Far vertex of a pendant two-path at each anchor.
    pub z: [f64; 3],
    /// Leaf at each anchor.
    pub w: [f64; 3],
    /// Non-anchor core vertices in the order of [`VertexRole::Core`].
    pub core: Vec<f64>,
}

/// Extends anchor values to an eigenvector of the whole family graph for the
/// eigenvalue `rho`. The returned vector follows the vertex order of
/// [`build_family`].
pub fn reconstruct_perron(
    spec: &FamilySpec,
    rho: f64,
    x: [f64; 3],
) -> Result<(PerronExtension, Vec<f64>), ReducedError> {
    if !(rho > 1.0) {
        return Err(ReducedError::Domain(format!(
            "rho must exceed 1, got {rho}"
        )));
    }
    if x.iter().any(|&v| !(v > 0.0)) {
        return Err(ReducedError::InvalidParameter(format!(
            "anchor values must be positive, got {x:?}"
        )));
    }
    let s = rho * rho - 1.0;
    let y = x.map(|v| rho * v / s);
    let z = x.map(|v| v / s);
    let w = x.map(|v| v / rho);
    let core = match spec.family {
        Family::G => vec![
            (rho * x[0] + x[1]) / s,
            (rho * x[1] + x[0]) / s,
            (rho * x[1] + x[2]) / s,
            (rho * x[2] + x[1]) / s,
        ],
        Family::H => vec![
            (rho * (x[0] + x[1]) + x[2]) / s,
            (rho * x[2] + x[0] + x[1]) / s,
        ],
    };
    let ext = PerronExtension { x, y, z, w, core };
    let fg = build_family(spec).map_err(|e| ReducedError::InvalidParameter(e.to_string()))?;
    let vector = fg
        .roles
        .iter()
        .map(|role| match *role {
            VertexRole::Anchor(i) => ext.x[i],
            VertexRole::Core(j) => ext.core[j],
            VertexRole::Leaf(i) => ext.w[i],
            VertexRole::PathNear(i) => ext.y[i],
            VertexRole::PathFar(i) => ext.z[i],
        })
        .collect();
    Ok((ext, vector))
}

/// `max |A x - rho x| / max |x|`.
pub fn perron_residual(g: &Graph, rho: f64, x: &[f64]) -> f64 {
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let res = (0..g.order())
        .map(|v| (g.neighbors(v).map(|u| x[u]).sum::<f64>() - rho * x[v]).abs())
        .fold(0.0, f64::max);
    res / scale
}

/// Spectral radius and unit Perron vector computed entirely through the
/// reduced model.
pub fn reduced_perron(spec: &FamilySpec) -> Result<(f64, Vec<f64>), ReducedError> {
    let rho = solve_rho_reduced(spec)?;
    let b = b_matrix(rho, spec)?;
    let anchors = eigvec_sym3(&b, lambda1_sym3(&b));
    let (_, mut v) = reconstruct_perron(spec, rho, anchors)?;
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    Ok((rho, v))
}
