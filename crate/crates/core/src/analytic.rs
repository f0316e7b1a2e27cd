//! Analytic-class reference radii: the classical Bohr-Rogosinski roots and
//! their refined single-function counterparts. These are the only closed-form
//! numeric ground truths available, so they double as solver calibration.

use crate::error::{Error, Result};
use crate::roots::bisect;

const MAX_ITER: u32 = 200;

/// Which reference radius a query asks for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticRadiusQuery {
    /// Positive root of `2 (1+r) r^N - (1-r)^2 = 0`.
    RogosinskiN { n: u32 },
    /// Positive root of `(1+r) r^N - (1-r)^2 = 0` (squared-modulus variant).
    RogosinskiNPrime { n: u32 },
    /// Closed form `2 / (3 + a0 + sqrt(5) (1 + a0))`.
    RefinedA0 { a0: f64 },
    /// Positive root of `(1 - a0^3) r^3 - (1 + 2 a0) r^2 - 2r + 1 = 0`.
    RefinedA0Prime { a0: f64 },
}

impl AnalyticRadiusQuery {
    /// Evaluates the query; `tol` is used by the root-finding variants.
    pub fn evaluate(&self, tol: f64) -> Result<f64> {
        match *self {
            AnalyticRadiusQuery::RogosinskiN { n } => rogosinski_rn(n, tol),
            AnalyticRadiusQuery::RogosinskiNPrime { n } => rogosinski_rn_prime(n, tol),
            AnalyticRadiusQuery::RefinedA0 { a0 } => refined_r_a0(a0),
            AnalyticRadiusQuery::RefinedA0Prime { a0 } => refined_r_a0_prime(a0, tol),
        }
    }
}

fn check_order(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    Ok(())
}

fn check_a0(a0: f64) -> Result<()> {
    if !(0.0..1.0).contains(&a0) {
        return Err(Error::Domain(format!(
            "a0 must lie in [0, 1), got {a0}"
        )));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Positive root of `2 (1+r) r^N - (1-r)^2 = 0` in (0, 1).
/// For N = 1 this is `sqrt(5) - 2`.
pub fn rogosinski_rn(n: u32, tol: f64) -> Result<f64> {
    check_order(n)?;
    check_tol(tol)?;
    let poly = |r: f64| Ok(2.0 * (1.0 + r) * r.powi(n as i32) - (1.0 - r) * (1.0 - r));
    // the left side is increasing with values -1 at 0 and 4 at 1
    Ok(bisect(poly, 0.0, 1.0, tol, MAX_ITER)?.root)
}

/// Positive root of `(1+r) r^N - (1-r)^2 = 0` in (0, 1).
/// For N = 1 this is exactly 1/3.
pub fn rogosinski_rn_prime(n: u32, tol: f64) -> Result<f64> {
    check_order(n)?;
    check_tol(tol)?;
    let poly = |r: f64| Ok((1.0 + r) * r.powi(n as i32) - (1.0 - r) * (1.0 - r));
    Ok(bisect(poly, 0.0, 1.0, tol, MAX_ITER)?.root)
}

/// Refined radius `2 / (3 + a0 + sqrt(5) (1 + a0))` for `a0 in [0, 1)`;
/// strictly greater than `sqrt(5) - 2` on the whole range.
pub fn refined_r_a0(a0: f64) -> Result<f64> {
    check_a0(a0)?;
    Ok(2.0 / (3.0 + a0 + 5.0f64.sqrt() * (1.0 + a0)))
}

/// Unique positive root of `(1 - a0^3) r^3 - (1 + 2 a0) r^2 - 2r + 1 = 0`,
/// bracketed a priori by `(1/3, 1/(2 + a0))`.
pub fn refined_r_a0_prime(a0: f64, tol: f64) -> Result<f64> {
    check_a0(a0)?;
    check_tol(tol)?;
    let poly = |r: f64| {
        Ok((1.0 - a0.powi(3)) * r.powi(3) - (1.0 + 2.0 * a0) * r * r - 2.0 * r + 1.0)
    };
    let lo = 1.0 / 3.0;
    let hi = 1.0 / (2.0 + a0);
    // positive at lo, negative at hi for every a0 in [0, 1); anything else
    // is an implementation error worth failing loudly on
    if !(poly(lo)? > 0.0 && poly(hi)? < 0.0) {
        return Err(Error::BracketFailure(format!(
            "expected a sign change on (1/3, 1/(2+a0)) for a0 = {a0}"
        )));
    }
    Ok(bisect(poly, lo, hi, tol, MAX_ITER)?.root)
}
