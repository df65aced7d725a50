use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bracketed root together with its quality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: f64,
    /// `f(value)`.
    pub residual: f64,
    /// Width of the final bracket.
    pub width: f64,
    pub iterations: u32,
}

/// Sign-change bisection on `[lo, hi]` until the bracket is no wider than
/// `tol` (or stops shrinking in floating point).
///
/// The returned point is whichever of the final endpoints and midpoint has
/// the smallest `|f|`, which puts it within a quarter bracket of the root.
pub fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<Root> {
    let (mut lo, mut hi) = (lo, hi);
    let (mut f_lo, f_hi) = (f(lo), f(hi));
    if f_lo == 0.0 {
        return Ok(Root { value: lo, residual: 0.0, width: hi - lo, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(Root { value: hi, residual: 0.0, width: hi - lo, iterations: 0 });
    }
    if !(f_lo.signum() != f_hi.signum() && f_lo.is_finite() && f_hi.is_finite()) {
        return Err(Error::BracketFailure { lo, hi, f_lo, f_hi });
    }

    let mut f_hi = f_hi;
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        iterations += 1;
        if f_mid == 0.0 {
            return Ok(Root { value: mid, residual: 0.0, width: hi - lo, iterations });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    let mid = 0.5 * (lo + hi);
    let f_mid = f(mid);
    let (value, residual) = [(lo, f_lo), (mid, f_mid), (hi, f_hi)]
        .into_iter()
        .min_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .unwrap();
    Ok(Root { value, residual, width: hi - lo, iterations })
}
