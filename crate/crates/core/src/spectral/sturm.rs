//! Sturm chains and exact ordering of largest real roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{IntPolynomial, SpectralError};

/// Sturm chain of the squarefree part of a nonzero polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs.filter(|&s| s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self, SpectralError> {
        if p.is_zero() {
            return Err(SpectralError::InvalidParameter(
                "Sturm chain of the zero polynomial".into(),
            ));
        }
        let s0 = p.squarefree_part();
        let s1 = s0.derivative().primitive_part();
        let mut seq = vec![s0, s1];
        while !seq[seq.len() - 1].is_zero() && seq[seq.len() - 1].degree() > Some(0) {
            let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(b);
            // prem = lc(b)^(delta+1) * rem; undo that factor's sign, then negate.
            let flip = b.leading().unwrap().is_negative() && delta % 2 == 0;
            let next = if flip { r } else { -r };
            seq.push(next.primitive_part());
        }
        if seq.last().is_some_and(|s| s.is_zero()) {
            seq.pop();
        }
        Ok(SturmChain { seq })
    }

    /// The squarefree polynomial heading the chain.
    pub fn head(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        sign_changes(self.seq.iter().map(|s| s.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        sign_changes(self.seq.iter().map(|s| {
            let lead = sign_of(s.leading().unwrap());
            if positive || s.degree().unwrap() % 2 == 0 {
                lead
            } else {
                lead.reverse()
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_root_count(
    p: &IntPolynomial,
    a: &BigRational,
    b: &BigRational,
) -> Result<usize, SpectralError> {
    if a >= b {
        return Err(SpectralError::InvalidInterval(format!(
            "({a}, {b}] is empty"
        )));
    }
    Ok(SturmChain::new(p)?.count(a, b))
}

/// Integer bound exceeding the absolute value of every root.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let lc = p
        .leading()
        .map(|c| c.abs())
        .unwrap_or_else(|| BigInt::from(1));
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigInt::from(2) + max / lc
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Half-open interval `(lo, hi]` containing the largest real root and no
/// other root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        midpoint(&self.lo, &self.hi).to_f64().unwrap_or(f64::NAN)
    }
}

struct LargestRoot {
    chain: SturmChain,
    iv: RootInterval,
}

impl LargestRoot {
    fn new(p: &IntPolynomial) -> Result<Self, SpectralError> {
        let chain = SturmChain::new(p)?;
        if chain.count_real() == 0 {
            return Err(SpectralError::NoRealRoot);
        }
        let b = BigRational::from_integer(root_bound(chain.head()));
        let mut iv = RootInterval {
            lo: -b.clone(),
            hi: b,
        };
        while chain.count(&iv.lo, &iv.hi) > 1 {
            let mid = midpoint(&iv.lo, &iv.hi);
            if chain.count(&mid, &iv.hi) >= 1 {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
        Ok(LargestRoot { chain, iv })
    }

    fn bisect(&mut self) {
        let mid = midpoint(&self.iv.lo, &self.iv.hi);
        if self.chain.count(&mid, &self.iv.hi) == 1 {
            self.iv.lo = mid;
        } else {
            self.iv.hi = mid;
        }
    }
}

/// Isolating interval of the largest real root.
pub fn largest_root_interval(p: &IntPolynomial) -> Result<RootInterval, SpectralError> {
    Ok(LargestRoot::new(p)?.iv)
}

/// Largest real root as a float, refined until the interval is narrower than
/// `width`.
pub fn largest_real_root(p: &IntPolynomial, width: f64) -> Result<f64, SpectralError> {
    let mut r = LargestRoot::new(p)?;
    let w = BigRational::from_float(width.max(1e-300))
        .ok_or_else(|| SpectralError::InvalidParameter(format!("bad width {width}")))?;
    while r.iv.width() > w {
        r.bisect();
    }
    Ok(r.iv.midpoint_f64())
}

/// Exact comparison of the largest real roots of `p1` and `p2`.
pub fn compare_largest_roots(
    p1: &IntPolynomial,
    p2: &IntPolynomial,
) -> Result<Ordering, SpectralError> {
    let mut r1 = LargestRoot::new(p1)?;
    let mut r2 = LargestRoot::new(p2)?;
    let common = SturmChain::new(&r1.chain.head().gcd(r2.chain.head())).ok();
    let mut checked_common = false;
    loop {
        if r1.iv.hi <= r2.iv.lo {
            return Ok(Ordering::Less);
        }
        if r2.iv.hi <= r1.iv.lo {
            return Ok(Ordering::Greater);
        }
        if !checked_common {
            // Each interval holds exactly one root of its polynomial, so a
            // common root in the overlap is the largest root of both.
            checked_common = true;
            if let Some(chain) = &common {
                let lo = (&r1.iv.lo).max(&r2.iv.lo).clone();
                let hi = (&r1.iv.hi).min(&r2.iv.hi).clone();
                if lo < hi && chain.count(&lo, &hi) >= 1 {
                    return Ok(Ordering::Equal);
                }
            }
        }
        if r1.iv.width() >= r2.iv.width() {
            r1.bisect();
        } else {
            r2.bisect();
        }
    }
}
