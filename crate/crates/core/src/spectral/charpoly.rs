//! Division-free characteristic polynomials (Berkowitz).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPolynomial, SpectralError};
use crate::graph::Graph;

pub const MAX_CHAR_POLY_ORDER: usize = 48;

trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

fn dot<T: Ring>(a: &[T], b: &[T]) -> Option<T> {
    a.iter()
        .zip(b)
        .try_fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)?))
}

/// Coefficients of `det(x I - A)` in descending degree, or `None` on overflow.
fn berkowitz<T: Ring>(a: &[Vec<T>]) -> Option<Vec<T>> {
    let n = a.len();
    let mut p = vec![T::one()];
    for k in 0..n {
        // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^(k-1) C with A the
        // leading k x k block, R = a[k][..k], C = a[..k][k].
        let mut t = Vec::with_capacity(k + 2);
        t.push(T::one());
        t.push(a[k][k].neg()?);
        let row = &a[k][..k];
        let mut v: Vec<T> = (0..k).map(|i| a[i][k].clone()).collect();
        for j in 0..k {
            t.push(dot(row, &v)?.neg()?);
            if j + 1 < k {
                v = (0..k).map(|i| dot(&a[i][..k], &v)).collect::<Option<_>>()?;
            }
        }
        let mut next = vec![T::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                *slot = slot.add(&t[i - j].mul(pj)?)?;
            }
        }
        p = next;
    }
    Some(p)
}

/// Exact `det(x I - M)` for an integer matrix.
pub fn char_poly_int_matrix(m: &[Vec<i64>]) -> IntPolynomial {
    let small: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let desc: Vec<BigInt> = match berkowitz(&small) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => {
            let big: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            berkowitz(&big).expect("big integers do not overflow")
        }
    };
    IntPolynomial::new(desc.into_iter().rev().collect())
}

/// Exact characteristic polynomial `det(x I - A)` of the adjacency matrix.
pub fn char_poly_exact(g: &Graph) -> Result<IntPolynomial, SpectralError> {
    let n = g.order();
    if n > MAX_CHAR_POLY_ORDER {
        return Err(SpectralError::ResourceLimit {
            order: n,
            limit: MAX_CHAR_POLY_ORDER,
        });
    }
    let m: Vec<Vec<i64>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v) as i64).collect())
        .collect();
    Ok(char_poly_int_matrix(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, star};

    #[test]
    fn known_polynomials() {
        assert_eq!(
            char_poly_exact(&path(2).unwrap()).unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, 1])
        );
        assert_eq!(
            char_poly_exact(&star(4).unwrap()).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, 0, -4, 0, 1])
        );
        assert_eq!(
            char_poly_exact(&cycle(3).unwrap()).unwrap(),
            IntPolynomial::from_i64s(&[-2, -3, 0, 1])
        );
        assert_eq!(
            char_poly_exact(&Graph::new(0)).unwrap(),
            IntPolynomial::from_i64s(&[1])
        );
        assert!(char_poly_exact(&path(49).unwrap()).is_err());
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let m: Vec<Vec<i64>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| if i == j { 1 << 40 } else { (i * 7 + j) as i64 })
                    .collect()
            })
            .collect();
        let p = char_poly_int_matrix(&m);
        assert_eq!(p.degree(), Some(6));
        // The constant term is det(-M); compare with evaluation at 0 via the
        // same polynomial at x = 2^40, where the diagonal vanishes.
        let shifted = p.eval(&(BigInt::from(1) << 40));
        let off: Vec<Vec<i64>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| if i == j { 0 } else { -((i * 7 + j) as i64) })
                    .collect()
            })
            .collect();
        let det_off = char_poly_int_matrix(&off).eval(&BigInt::from(0));
        assert_eq!(shifted, det_off);
    }
}
