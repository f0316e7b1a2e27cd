//! Bracketed bisection: the one root-finding engine used for the majorant
//! equations and the analytic reference polynomials alike.
//!
//! Bisection is chosen deliberately over Newton-type methods: every function
//! solved here is monotone with a certified sign change, so bisection is
//! unconditionally convergent and the final bracket doubles as a certificate.

use crate::error::{Error, Result};

/// A converged bisection run. `lo` and `hi` straddle the root with
/// `f(lo) * f(hi) <= 0` and `hi - lo <= 2 * tol`; `root` is their midpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: u32,
    /// |f(root)| at the returned midpoint.
    pub residual: f64,
}

/// Bisects `f` on `[lo, hi]`. The endpoint values must differ in sign (an
/// endpoint value of exactly zero counts as the root). Errors with
/// `BracketFailure` otherwise and `NoSignChange` if `max_iter` runs out
/// before the bracket shrinks to `2 * tol`.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64, max_iter: u32) -> Result<Bisection>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "bracket must satisfy lo < hi, got [{lo}, {hi}]"
        )));
    }
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(Bisection {
            root: lo,
            lo,
            hi: lo,
            iterations: 0,
            residual: 0.0,
        });
    }
    if f_hi == 0.0 {
        return Ok(Bisection {
            root: hi,
            lo: hi,
            hi,
            iterations: 0,
            residual: 0.0,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure(format!(
            "no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}"
        )));
    }

    let (mut lo, mut hi) = (lo, hi);
    let mut iterations = 0;
    while hi - lo > 2.0 * tol && iterations < max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // interval no longer representable any tighter
            break;
        }
        let f_mid = f(mid)?;
        // an exact zero moves to the hi side (signum 0 != signum of f_lo),
        // keeping f(lo) strictly on its original side
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    if hi - lo > 2.0 * tol && lo < hi {
        return Err(Error::NoSignChange(format!(
            "bisection did not reach tolerance {tol} within {max_iter} iterations \
             (bracket [{lo}, {hi}])"
        )));
    }
    let root = 0.5 * (lo + hi);
    let residual = f(root)?.abs();
    Ok(Bisection {
        root,
        lo,
        hi,
        iterations,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let b = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-13, 200).unwrap();
        assert!((b.root - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(b.hi - b.lo <= 2e-13);
        assert!(b.residual < 1e-11);
    }

    #[test]
    fn accepts_reversed_orientation() {
        // decreasing function: f(lo) > 0 > f(hi)
        let b = bisect(|x| Ok(1.0 - x * x), 0.5, 3.0, 1e-12, 200).unwrap();
        assert!((b.root - 1.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        assert!(matches!(
            bisect(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-12, 200),
            Err(Error::BracketFailure(_))
        ));
    }

    #[test]
    fn exact_zero_at_endpoint_short_circuits() {
        let b = bisect(Ok, 0.0, 1.0, 1e-12, 200).unwrap();
        assert_eq!(b.root, 0.0);
        assert_eq!(b.iterations, 0);
    }

    #[test]
    fn deterministic_across_runs() {
        let run = || bisect(|x| Ok(x.exp() - 3.0), 0.0, 2.0, 1e-14, 200).unwrap();
        let (a, b) = (run(), run());
        assert_eq!(a.root.to_bits(), b.root.to_bits());
        assert_eq!(a.iterations, b.iterations);
    }
}
