//! Scalar root bracketing and bisection used by curve inversion and
//! quantile computations.

use crate::error::{Error, Result};

/// Bisect `f` to a root on `[lo, hi]`; requires a sign change. Terminates
/// when the interval is below `tol` absolute (or machine-limited).
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || (flo > 0.0) == (fhi > 0.0) {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}]: f = ({flo}, {fhi})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval at machine resolution
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo < tol {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Expand geometrically around `start` (step doubling each way) until `f`
/// changes sign, then return the bracketing interval.
pub fn expand_bracket<F: Fn(f64) -> f64>(
    f: F,
    start: f64,
    initial_step: f64,
    max_expansions: usize,
) -> Result<(f64, f64)> {
    let f0 = f(start);
    if f0 == 0.0 {
        return Ok((start, start));
    }
    let mut step = initial_step.abs().max(f64::MIN_POSITIVE);
    let mut lo = start;
    let mut hi = start;
    let mut flo = f0;
    let mut fhi = f0;
    for _ in 0..max_expansions {
        let left = lo - step;
        let fleft = f(left);
        if fleft.is_finite() && (fleft > 0.0) != (flo > 0.0) {
            return Ok((left, lo));
        }
        if fleft.is_finite() {
            lo = left;
            flo = fleft;
        }
        let right = hi + step;
        let fright = f(right);
        if fright.is_finite() && (fright > 0.0) != (fhi > 0.0) {
            return Ok((hi, right));
        }
        if fright.is_finite() {
            hi = right;
            fhi = fright;
        }
        step *= 2.0;
    }
    Err(Error::Bracket(format!(
        "no sign change within {max_expansions} expansions around {start}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn expand_finds_bracket() {
        let (lo, hi) = expand_bracket(|x| x - 37.5, 0.0, 1.0, 60).unwrap();
        assert!(lo <= 37.5 && 37.5 <= hi);
    }
}
