//! Closed-form eigen-analysis of real symmetric 3x3 matrices.

pub type Mat3 = [[f64; 3]; 3];

/// `det(x I - m)`.
pub fn char_sym3(m: &Mat3, x: f64) -> f64 {
    let a = |i: usize, j: usize| if i == j { x - m[i][j] } else { -m[i][j] };
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
        - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

/// Derivative of [`char_sym3`] in `x`: the sum of the principal 2x2 minors.
fn char_sym3_derivative(m: &Mat3, x: f64) -> f64 {
    let minor = |i: usize, j: usize| (x - m[i][i]) * (x - m[j][j]) - m[i][j] * m[j][i];
    minor(0, 1) + minor(0, 2) + minor(1, 2)
}

/// Largest eigenvalue of a symmetric matrix (trigonometric cubic solution
/// followed by a Newton correction on the characteristic polynomial).
pub fn lambda1_sym3(m: &Mat3) -> f64 {
    let off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    let q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    let diag_dev = (m[0][0] - q).powi(2) + (m[1][1] - q).powi(2) + (m[2][2] - q).powi(2);
    let p2 = diag_dev + 2.0 * off;
    if p2 == 0.0 {
        return q;
    }
    let p = (p2 / 6.0).sqrt();
    let mut b = *m;
    for (i, row) in b.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (*v - if i == j { q } else { 0.0 }) / p;
        }
    }
    let det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let mut lambda = q + 2.0 * p * phi.cos();
    let value = char_sym3(m, lambda);
    let slope = char_sym3_derivative(m, lambda);
    if slope.abs() > 1e-8 * p2.max(1.0) {
        let next = lambda - value / slope;
        if char_sym3(m, next).abs() <= value.abs() {
            lambda = next;
        }
    }
    lambda
}

/// Unit eigenvector for the simple eigenvalue `lambda`, oriented to have a
/// nonnegative coordinate sum.
pub fn eigvec_sym3(m: &Mat3, lambda: f64) -> [f64; 3] {
    let mut rows = *m;
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let cross = |a: [f64; 3], b: [f64; 3]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let norm2 = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>();
    let mut best = [0.0; 3];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = cross(rows[i], rows[j]);
        if norm2(c) > norm2(best) {
            best = c;
        }
    }
    let n = norm2(best).sqrt();
    if n == 0.0 {
        return [1.0, 0.0, 0.0];
    }
    let sign = if best.iter().sum::<f64>() < 0.0 {
        -1.0
    } else {
        1.0
    };
    best.map(|x| sign * x / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: Mat3 = [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]];

    #[test]
    fn closed_forms() {
        assert!((lambda1_sym3(&E1) - 2f64.sqrt()).abs() < 1e-14);
        assert_eq!(
            lambda1_sym3(&[[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 3.0]]),
            3.0
        );
        let mut shifted = E1;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += 3.0;
        }
        assert!((lambda1_sym3(&shifted) - 3.0 - 2f64.sqrt()).abs() < 1e-13);
        assert_eq!(lambda1_sym3(&[[2.0; 3]; 3]), 6.0);
        assert_eq!(lambda1_sym3(&[[0.0; 3]; 3]), 0.0);
    }

    #[test]
    fn eigenvector() {
        let v = eigvec_sym3(&E1, 2f64.sqrt());
        let s = 2f64.sqrt();
        assert!(
            (v[0] - 0.5).abs() < 1e-14
                && (v[1] - s / 2.0).abs() < 1e-14
                && (v[2] - 0.5).abs() < 1e-14
        );
    }
}
