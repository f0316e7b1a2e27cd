//! Solves the majorant equation on (0, 1), returning the sharp radius with a
//! certified bracket and residual.

use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::functional::{Convention, FunctionalParams, Majorant};
use crate::roots::bisect;

/// Upper cap for the bracket search; the majorant is provably positive
/// before r reaches 1, so failing to see a sign change below this cap
/// signals an evaluator bug rather than a property of the input.
const R_CAP: f64 = 1.0 - 1e-12;

const MAX_ITER: u32 = 200;

/// A solved radius with its certificate: the final bracket straddles the
/// root (majorant negative at `bracket_lo`, nonnegative at `bracket_hi`) and
/// is at most `2 * tol` wide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub radius: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: u32,
    /// |majorant(radius)| at the returned midpoint.
    pub residual: f64,
}

/// Finds the unique zero of the class majorant in (0, 1) to within `tol`.
///
/// The lower bracket starts at 0, where the majorant equals minus the
/// distance bound and is strictly negative for every valid spec; the upper
/// bracket expands geometrically toward 1 (`r <- 1 - (1-r)/2` from 0.5)
/// until the majorant turns nonnegative.
pub fn solve_radius(
    spec: &ClassSpec,
    params: &FunctionalParams,
    conv: Convention,
    tol: f64,
) -> Result<RadiusResult> {
    if !(tol > 0.0 && tol <= 1e-3) {
        return Err(Error::InvalidArgument(format!(
            "solver tolerance must lie in (0, 1e-3], got {tol}"
        )));
    }
    let majorant = Majorant::new(*spec, *params, conv)?;
    solve_majorant(&majorant, tol)
}

pub(crate) fn solve_majorant(majorant: &Majorant, tol: f64) -> Result<RadiusResult> {
    if majorant.eval(0.0)? >= 0.0 {
        return Err(Error::InvalidProblem(
            "majorant is nonnegative at r = 0; the constant term should be strictly negative \
             for every valid class spec"
                .into(),
        ));
    }
    let mut lo = 0.0;
    let mut hi = 0.5;
    loop {
        if majorant.eval(hi)? >= 0.0 {
            break;
        }
        if hi >= R_CAP {
            return Err(Error::NoSignChange(format!(
                "majorant still negative at r = {R_CAP}; divergence toward 1 guarantees a sign \
                 change, so this indicates an evaluator defect"
            )));
        }
        lo = hi;
        hi = (1.0 - (1.0 - hi) / 2.0).min(R_CAP);
    }
    let b = bisect(|r| majorant.eval(r), lo, hi, tol, MAX_ITER)?;
    Ok(RadiusResult {
        radius: b.root,
        bracket_lo: b.lo,
        bracket_hi: b.hi,
        iterations: b.iterations,
        residual: b.residual,
    })
}

/// Samples the majorant on a uniform grid strictly inside (0, 1 - 1e-6) and
/// reports whether it is strictly increasing there. A sampling check, not a
/// proof; intended as a solver precondition audit.
pub fn audit_monotone(
    spec: &ClassSpec,
    params: &FunctionalParams,
    conv: Convention,
    grid_size: u32,
) -> Result<bool> {
    if grid_size < 16 {
        return Err(Error::InvalidArgument(format!(
            "monotonicity audit needs grid_size >= 16, got {grid_size}"
        )));
    }
    let majorant = Majorant::new(*spec, *params, conv)?;
    let top = 1.0 - 1e-6;
    let mut prev = f64::NEG_INFINITY;
    for k in 1..=grid_size {
        let r = top * k as f64 / (grid_size as f64 + 1.0);
        let value = majorant.eval(r)?;
        if value <= prev {
            return Ok(false);
        }
        prev = value;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::phi;

    fn params(m: u32, n: u32, mu: f64, lambda: f64) -> FunctionalParams {
        FunctionalParams::new(m, n, mu, lambda).unwrap()
    }

    #[test]
    fn base_case_root_location() {
        // alpha = 0, m = 1, N = 1, mu = lambda = 0: root of
        // 2 F(r) = 2 ln 2 - 1 lies in (0.16, 0.17).
        let spec = ClassSpec::ph0_alpha(0.0).unwrap();
        let res = solve_radius(&spec, &params(1, 1, 0.0, 0.0), Convention::ExactA1, 1e-12).unwrap();
        assert!(res.radius > 0.16 && res.radius < 0.17, "radius {}", res.radius);
        assert!(res.bracket_hi - res.bracket_lo <= 2e-12);
        let lo = phi(&spec, &params(1, 1, 0.0, 0.0), Convention::ExactA1, res.bracket_lo).unwrap();
        let hi = phi(&spec, &params(1, 1, 0.0, 0.0), Convention::ExactA1, res.bracket_hi).unwrap();
        assert!(lo < 0.0 && hi >= 0.0);
        assert!(res.residual <= (hi - lo).abs());
    }

    #[test]
    fn degenerate_class_limit_approaches_half() {
        // alpha -> 1: every n >= 2 coefficient vanishes and the equation
        // collapses to 2r = 1.
        let spec = ClassSpec::ph0_alpha(1.0 - 1e-9).unwrap();
        let res = solve_radius(&spec, &params(1, 1, 0.0, 0.0), Convention::ExactA1, 1e-6).unwrap();
        assert!((res.radius - 0.5).abs() < 1e-6, "radius {}", res.radius);
    }

    #[test]
    fn class_coincidence_at_alpha_zero() {
        let w = ClassSpec::wh0_alpha(0.0).unwrap();
        let p = ClassSpec::ph0_alpha(0.0).unwrap();
        for pars in [params(1, 1, 0.0, 0.0), params(2, 4, 1.0, 1.0)] {
            let rw = solve_radius(&w, &pars, Convention::ExactA1, 1e-12).unwrap();
            let rp = solve_radius(&p, &pars, Convention::ExactA1, 1e-12).unwrap();
            assert!((rw.radius - rp.radius).abs() < 1e-9);
        }
    }

    #[test]
    fn resolving_with_tighter_tolerance_is_stable() {
        let spec = ClassSpec::ph0_m(0.6).unwrap();
        let pars = params(2, 5, 1.0, 1.0);
        let coarse = solve_radius(&spec, &pars, Convention::ExactA1, 1e-8).unwrap();
        let fine = solve_radius(&spec, &pars, Convention::ExactA1, 1e-10).unwrap();
        assert!((coarse.radius - fine.radius).abs() <= 1e-8);
    }

    #[test]
    fn determinism_is_bit_exact() {
        let spec = ClassSpec::wh0_alpha(0.3).unwrap();
        let pars = params(2, 6, 1.0, 1.0);
        let a = solve_radius(&spec, &pars, Convention::ExactA1, 1e-12).unwrap();
        let b = solve_radius(&spec, &pars, Convention::ExactA1, 1e-12).unwrap();
        assert_eq!(a.radius.to_bits(), b.radius.to_bits());
        assert_eq!(a, b);
    }

    #[test]
    fn tolerance_validation() {
        let spec = ClassSpec::ph0_alpha(0.2).unwrap();
        let pars = params(1, 1, 0.0, 0.0);
        assert!(solve_radius(&spec, &pars, Convention::ExactA1, 0.0).is_err());
        assert!(solve_radius(&spec, &pars, Convention::ExactA1, 1e-2).is_err());
    }

    #[test]
    fn audit_monotone_accepts_valid_cases() {
        assert!(audit_monotone(
            &ClassSpec::ph0_alpha(0.3).unwrap(),
            &params(1, 5, 1.0, 1.0),
            Convention::ExactA1,
            64
        )
        .unwrap());
        assert!(audit_monotone(
            &ClassSpec::ph0_m(0.2).unwrap(),
            &params(2, 6, 1.0, 1.0),
            Convention::ExactA1,
            64
        )
        .unwrap());
    }

    #[test]
    fn audit_monotone_rejects_tiny_grid() {
        assert!(matches!(
            audit_monotone(
                &ClassSpec::ph0_alpha(0.3).unwrap(),
                &params(1, 1, 0.0, 0.0),
                Convention::ExactA1,
                2
            ),
            Err(Error::InvalidArgument(_))
        ));
    }
}
