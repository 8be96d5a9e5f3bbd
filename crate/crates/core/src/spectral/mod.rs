//! Spectral radii, Perron vectors and exact characteristic polynomials.

mod charpoly;
mod poly;
mod sturm;
mod sym3;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use charpoly::{char_poly_exact, char_poly_int_matrix, MAX_CHAR_POLY_ORDER};
pub use poly::IntPolynomial;
pub use sturm::{
    compare_largest_roots, largest_real_root, largest_root_interval, root_bound, sturm_root_count,
    RootInterval, SturmChain,
};
pub use sym3::{char_sym3, eigvec_sym3, lambda1_sym3, Mat3};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
const MAX_POWER_ITERATIONS: usize = 1_000_000;
/// Above this order the dense Rayleigh-quotient solve is skipped.
const MAX_DENSE_ORDER: usize = 400;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no convergence after {iterations} iterations (rho = {rho}, residual = {residual:e})")]
    Convergence {
        iterations: usize,
        rho: f64,
        residual: f64,
        perron: Vec<f64>,
    },
    #[error("order {order} exceeds the limit of {limit}")]
    ResourceLimit { order: usize, limit: usize },
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("polynomial has no real root")]
    NoRealRoot,
}

/// Spectral radius with its Perron vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub rho: f64,
    /// Positive unit vector.
    pub perron: Vec<f64>,
    /// `max |A x - rho x|`.
    pub residual: f64,
    pub iterations: usize,
}

struct Operator {
    adj: Vec<Vec<usize>>,
}

impl Operator {
    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (o, nb) in out.iter_mut().zip(&self.adj) {
            *o = nb.iter().map(|&u| x[u]).sum();
        }
    }

    /// Rayleigh quotient of a unit vector and the residual infinity norm.
    fn rayleigh(&self, x: &[f64], scratch: &mut [f64]) -> (f64, f64) {
        self.apply(x, scratch);
        let rho: f64 = x.iter().zip(scratch.iter()).map(|(a, b)| a * b).sum();
        let res = x
            .iter()
            .zip(scratch.iter())
            .map(|(a, b)| (b - rho * a).abs())
            .fold(0.0, f64::max);
        (rho, res)
    }
}

fn normalize(x: &mut [f64]) {
    let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let sign = if x.iter().sum::<f64>() < 0.0 {
        -1.0
    } else {
        1.0
    };
    x.iter_mut().for_each(|v| *v *= sign / n);
}

/// Power iteration on `A + I` until the residual drops to `target`.
fn power(
    op: &Operator,
    x: &mut Vec<f64>,
    target: impl Fn(f64) -> f64,
    max_iter: usize,
) -> (f64, f64, usize) {
    let mut ax = vec![0.0; x.len()];
    let mut it = 0;
    loop {
        let (rho, res) = op.rayleigh(x, &mut ax);
        if res <= target(rho) || it >= max_iter {
            return (rho, res, it);
        }
        for (xi, a) in x.iter_mut().zip(&ax) {
            *xi += a;
        }
        normalize(x);
        it += 1;
    }
}

/// Solves `(A - mu I) y = x` by Gaussian elimination with partial pivoting.
fn shifted_solve(op: &Operator, mu: f64, x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut m = vec![0.0; n * n];
    for (i, nb) in op.adj.iter().enumerate() {
        for &j in nb {
            m[i * n + j] = 1.0;
        }
        m[i * n + i] = -mu;
    }
    let mut b = x.to_vec();
    let tiny = 1e-300;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&a, &c| m[a * n + col].abs().total_cmp(&m[c * n + col].abs()))
            .unwrap();
        if piv != col {
            for k in 0..n {
                m.swap(piv * n + k, col * n + k);
            }
            b.swap(piv, col);
        }
        if m[col * n + col].abs() < tiny {
            m[col * n + col] = tiny;
        }
        let d = m[col * n + col];
        for r in col + 1..n {
            let f = m[r * n + col] / d;
            if f != 0.0 {
                for k in col..n {
                    m[r * n + k] -= f * m[col * n + k];
                }
                b[r] -= f * b[col];
            }
        }
    }
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| m[r * n + k] * b[k]).sum();
        b[r] = (b[r] - s) / m[r * n + r];
    }
    b
}

/// Spectral radius and Perron vector of a connected graph, with
/// `residual <= tol * max(1, rho)`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<Spectrum, SpectralError> {
    let n = g.order();
    if !(tol > 0.0) {
        return Err(SpectralError::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if n == 0 || !g.is_connected() {
        return Err(SpectralError::InvalidParameter(
            "spectral radius needs a nonempty connected graph".into(),
        ));
    }
    if n == 1 {
        return Ok(Spectrum {
            rho: 0.0,
            perron: vec![1.0],
            residual: 0.0,
            iterations: 0,
        });
    }
    let op = Operator {
        adj: g.adjacency_lists(),
    };
    let target = |rho: f64| tol * rho.max(1.0);
    let mut x: Vec<f64> = (0..n).map(|v| 1.0 + g.degree(v) as f64).collect();
    normalize(&mut x);
    let (rho0, res0, mut iterations) =
        power(&op, &mut x, |r| target(r).max(1e-6), MAX_POWER_ITERATIONS);
    if res0 <= target(rho0) {
        return Ok(Spectrum {
            rho: rho0,
            perron: x,
            residual: res0,
            iterations,
        });
    }
    let mut scratch = vec![0.0; n];
    if n <= MAX_DENSE_ORDER {
        let mut y = x.clone();
        let mut rho = rho0;
        for _ in 0..8 {
            y = shifted_solve(&op, rho, &y);
            normalize(&mut y);
            iterations += 1;
            let (r, res) = op.rayleigh(&y, &mut scratch);
            rho = r;
            if res <= target(rho) {
                break;
            }
        }
        let (rho, res) = op.rayleigh(&y, &mut scratch);
        if res <= target(rho) && rho >= rho0 - 1e-6 && y.iter().all(|&v| v > 0.0) {
            return Ok(Spectrum {
                rho,
                perron: y,
                residual: res,
                iterations,
            });
        }
    }
    let remaining = MAX_POWER_ITERATIONS.saturating_sub(iterations);
    let (rho, res, more) = power(&op, &mut x, target, remaining);
    iterations += more;
    if res <= target(rho) && x.iter().all(|&v| v > 0.0) {
        Ok(Spectrum {
            rho,
            perron: x,
            residual: res,
            iterations,
        })
    } else {
        Err(SpectralError::Convergence {
            iterations,
            rho,
            residual: res,
            perron: x,
        })
    }
}
