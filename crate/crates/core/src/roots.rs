//! One-dimensional root bracketing, refinement and maximisation.

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

const MAX_ITERATIONS: usize = 200;

/// Bisection on `[lo, hi]`, which must bracket a sign change of `f`.
/// Stops when the bracket is narrower than `tol` or can no longer be split.
pub fn bisect<T, F>(mut f: F, mut lo: T, mut hi: T, tol: T) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == T::zero() {
        return Ok(lo);
    }
    if f_hi == T::zero() {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure(format!(
            "no sign change on [{lo}, {hi}]"
        )));
    }
    for _ in 0..MAX_ITERATIONS {
        let mid = lo + (hi - lo) * lit(0.5);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * lit(0.5))
}

/// Secant iteration started from the two ends of a bracket. Falls back to the
/// bracket midpoint if an update would leave it.
pub fn secant<T, F>(mut f: F, lo: T, hi: T, tol: T) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let (mut x0, mut x1) = (lo, hi);
    let (mut f0, mut f1) = (f(x0)?, f(x1)?);
    for _ in 0..MAX_ITERATIONS {
        if f1 == T::zero() {
            return Ok(x1);
        }
        let denom = f1 - f0;
        let mut x2 = if denom == T::zero() {
            x1
        } else {
            x1 - f1 * (x1 - x0) / denom
        };
        if !(x2 > lo && x2 < hi) {
            x2 = lo + (hi - lo) * lit(0.5);
        }
        if (x2 - x1).abs() <= tol {
            return Ok(x2);
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1)?;
    }
    Err(Error::BracketFailure(format!(
        "secant did not converge on [{lo}, {hi}]"
    )))
}

/// Golden-section search for the maximiser of a unimodal `f` on `[a, b]`.
pub fn golden_section_max<T, F>(mut f: F, mut a: T, mut b: T, tol: T) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let inv_phi = (lit::<T>(5.0).sqrt() - T::one()) * lit(0.5);
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..MAX_ITERATIONS {
        if (b - a).abs() <= tol {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d)?;
        }
    }
    Ok((a + b) * lit(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x: f64| Ok(x * x - 2.0), 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn bisect_requires_bracket() {
        let r = bisect(|x: f64| Ok(x * x + 1.0), -1.0, 2.0, 1e-12);
        assert!(matches!(r, Err(Error::BracketFailure(_))));
    }

    #[test]
    fn secant_agrees_with_bisection() {
        let f = |x: f64| Ok(x.cos() - x);
        let a = bisect(f, 0.0, 1.0, 1e-14).unwrap();
        let b = secant(f, 0.0, 1.0, 1e-14).unwrap();
        assert!((a - b).abs() < 1e-13);
    }

    #[test]
    fn golden_section_on_parabola() {
        let x = golden_section_max(|x: f64| Ok(-(x - 0.3) * (x - 0.3)), 0.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-8);
    }
}
