//! The three harmonic mapping classes: parameter validity, coefficient
//! bounds, growth envelopes, boundary-distance lower bounds, and the extremal
//! coefficient sequences that attain every bound.
//!
//! Throughout, a harmonic mapping is normalized so its first analytic
//! coefficient is 1 and its first co-analytic coefficient is 0; only the
//! coefficient magnitudes `|a_n| + |b_n|` enter any formula in this crate.

use crate::error::{Error, Result};
use crate::specfun::{sum_alternating, sum_geometric_tail, TailBound};
use std::f64::consts::LN_2;

/// Default tolerance for internal series summations.
pub(crate) const DEFAULT_TOL: f64 = 1e-12;

/// Which harmonic class a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// f = h + conj(g) with Re(h'(z) - alpha) > |g'(z)|, 0 <= alpha < 1.
    /// Coefficient bound 2(1-alpha)/n.
    PH0Alpha,
    /// f with Re(z h''(z)) > -M + |z g''(z)|, 0 < M < 1/(2(ln4 - 1)).
    /// Coefficient bound 2M/(n(n-1)).
    PH0M,
    /// f with Re(h' + alpha z h'') > |g' + alpha z g''|, 0 <= alpha < 1.
    /// Coefficient bound 2/(alpha n^2 + (1-alpha) n).
    WH0Alpha,
}

impl ClassKind {
    /// Stable lowercase name used in CLI flags and report rows.
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::PH0Alpha => "ph0-alpha",
            ClassKind::PH0M => "ph0-m",
            ClassKind::WH0Alpha => "wh0-alpha",
        }
    }
}

/// Upper limit of the validity range for the `PH0M` parameter,
/// `1 / (2 (ln 4 - 1))`. At and beyond this value the distance lower bound
/// `1 + 2M(1 - 2 ln 2)` stops being positive.
pub fn m_upper() -> f64 {
    1.0 / (2.0 * (2.0 * LN_2 - 1.0))
}

/// A validated (class, parameter) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassSpec {
    kind: ClassKind,
    param: f64,
}

impl ClassSpec {
    /// Validates the parameter against the class's hypothesis range.
    ///
    /// `PH0M` rejects M = 0: the class degenerates to f(z) = z there and
    /// every radius question trivializes, so a sweep that silently included
    /// it would be meaningless.
    pub fn new(kind: ClassKind, param: f64) -> Result<Self> {
        let ok = match kind {
            ClassKind::PH0Alpha | ClassKind::WH0Alpha => (0.0..1.0).contains(&param),
            ClassKind::PH0M => param > 0.0 && param < m_upper(),
        };
        if !ok {
            let range = match kind {
                ClassKind::PH0Alpha | ClassKind::WH0Alpha => "0 <= alpha < 1".to_string(),
                ClassKind::PH0M => format!("0 < M < {:.6} (M > 0 is required)", m_upper()),
            };
            return Err(Error::InvalidClass(format!(
                "{} requires {range}, got {param}",
                kind.name()
            )));
        }
        Ok(ClassSpec { kind, param })
    }

    pub fn ph0_alpha(alpha: f64) -> Result<Self> {
        Self::new(ClassKind::PH0Alpha, alpha)
    }

    pub fn ph0_m(m: f64) -> Result<Self> {
        Self::new(ClassKind::PH0M, m)
    }

    pub fn wh0_alpha(alpha: f64) -> Result<Self> {
        Self::new(ClassKind::WH0Alpha, alpha)
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn param(&self) -> f64 {
        self.param
    }
}

/// Sharp bound on `|a_n| + |b_n|` for `n >= 2`.
///
/// The n = 1 coefficient is fixed at 1 by normalization and is not covered
/// by these bounds, hence the domain error below 2.
pub fn coeff_bound(spec: &ClassSpec, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "coefficient bounds apply to n >= 2 (n = 1 is fixed by normalization), got {n}"
        )));
    }
    Ok(coeff_bound_unchecked(spec, n))
}

#[inline]
pub(crate) fn coeff_bound_unchecked(spec: &ClassSpec, n: usize) -> f64 {
    let nf = n as f64;
    match spec.kind {
        ClassKind::PH0Alpha => 2.0 * (1.0 - spec.param) / nf,
        ClassKind::PH0M => 2.0 * spec.param / (nf * (nf - 1.0)),
        ClassKind::WH0Alpha => 2.0 / (spec.param * nf * nf + (1.0 - spec.param) * nf),
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must lie in [0, 1), got {r}")));
    }
    Ok(())
}

/// Sharp upper envelope for `|f(z)|` at `|z| = r`:
/// `r + sum_{n>=2} coeff_bound(n) r^n`.
///
/// Closed forms for the first two classes; tail-bounded summation for the
/// third, which has no elementary closed form for general alpha.
pub fn growth_upper(spec: &ClassSpec, r: f64) -> Result<f64> {
    Ok(growth_upper_with_tail(spec, r, DEFAULT_TOL)?.value)
}

/// As [`growth_upper`], but reporting the summation truncation as a
/// [`TailBound`] (zero tail for the closed-form classes).
pub fn growth_upper_with_tail(spec: &ClassSpec, r: f64, tol: f64) -> Result<TailBound> {
    check_radius(r)?;
    match spec.kind {
        ClassKind::PH0Alpha => Ok(exact(r - 2.0 * (1.0 - spec.param) * (r + (1.0 - r).ln()))),
        ClassKind::PH0M => Ok(exact(
            r + 2.0 * spec.param * (r + (1.0 - r) * (1.0 - r).ln()),
        )),
        ClassKind::WH0Alpha => {
            let spec = *spec;
            let series = sum_geometric_tail(|n| coeff_bound_unchecked(&spec, n), r, 2, tol)?;
            Ok(TailBound {
                value: r + series.value,
                ..series
            })
        }
    }
}

fn exact(value: f64) -> TailBound {
    TailBound {
        value,
        tail: 0.0,
        terms_used: 0,
        nonnegative: true,
    }
}

/// Lower bound on the distance from f(0) to the boundary of the image of the
/// unit disk, sharp for the extremal function of each class:
/// `1 + sum_{n>=2} (-1)^(n-1) coeff_bound(n)`.
pub fn distance_lower_bound(spec: &ClassSpec) -> f64 {
    distance_lower_bound_with_tail(spec, DEFAULT_TOL).value
}

/// As [`distance_lower_bound`], reporting the alternating-summation tail for
/// the class without a closed form.
pub fn distance_lower_bound_with_tail(spec: &ClassSpec, tol: f64) -> TailBound {
    match spec.kind {
        ClassKind::PH0Alpha => exact(1.0 + 2.0 * (1.0 - spec.param) * (LN_2 - 1.0)),
        ClassKind::PH0M => exact(1.0 + 2.0 * spec.param * (1.0 - 2.0 * LN_2)),
        ClassKind::WH0Alpha => {
            let spec = *spec;
            let series = sum_alternating(|n| coeff_bound_unchecked(&spec, n), 2, tol)
                .expect("W-class distance terms are positive, decreasing and convex");
            TailBound {
                value: 1.0 + series.value,
                ..series
            }
        }
    }
}

/// Truncated `(|a_n|, |b_n|)` magnitudes of a harmonic mapping,
/// with the normalization `(1, 0)` at n = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    pairs: Vec<(f64, f64)>,
}

impl CoefficientSequence {
    /// `pairs[0]` corresponds to n = 1 and must equal `(1, 0)`; all
    /// magnitudes must be finite and nonnegative.
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        match pairs.first() {
            Some(&(1.0, 0.0)) => {}
            other => {
                return Err(Error::Domain(format!(
                    "coefficient sequence must start with the normalized pair (1, 0), got {other:?}"
                )))
            }
        }
        if let Some(bad) = pairs
            .iter()
            .find(|(a, b)| !(a.is_finite() && b.is_finite() && *a >= 0.0 && *b >= 0.0))
        {
            return Err(Error::Domain(format!(
                "coefficient magnitudes must be finite and nonnegative, got {bad:?}"
            )));
        }
        Ok(CoefficientSequence { pairs })
    }

    /// Highest index n carried by this truncation.
    pub fn n_max(&self) -> usize {
        self.pairs.len()
    }

    /// `|a_n| + |b_n|`, 1-indexed; n must be within the truncation.
    pub fn magnitude_sum(&self, n: usize) -> f64 {
        let (a, b) = self.pairs[n - 1];
        a + b
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    /// True when `|a_n| + |b_n| <= coeff_bound(n)` for every carried n >= 2
    /// (up to a one-ulp slack so bound-attaining sequences qualify).
    pub fn is_admissible(&self, spec: &ClassSpec) -> bool {
        (2..=self.n_max()).all(|n| {
            let bound = coeff_bound_unchecked(spec, n);
            self.magnitude_sum(n) <= bound * (1.0 + 1e-15)
        })
    }
}

/// The class's extremal coefficient sequence, truncated at `n_max`: every
/// bound is attained with equality and the co-analytic part vanishes.
pub fn extremal_sequence(spec: &ClassSpec, n_max: usize) -> CoefficientSequence {
    let n_max = n_max.max(1);
    let mut pairs = Vec::with_capacity(n_max);
    pairs.push((1.0, 0.0));
    for n in 2..=n_max {
        pairs.push((coeff_bound_unchecked(spec, n), 0.0));
    }
    CoefficientSequence { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Direct alternating oracle. Consecutive partial sums bracket the limit,
    /// so the midpoint after K terms is within (c(K+1) - c(K+2))/2 of it;
    /// stops once that is below `tol`.
    fn distance_oracle(spec: &ClassSpec, tol: f64) -> (f64, f64) {
        let mut sum = 1.0;
        let mut n = 2;
        loop {
            let term = coeff_bound_unchecked(spec, n);
            sum += if n % 2 == 1 { term } else { -term };
            let next = coeff_bound_unchecked(spec, n + 1);
            let bound = 0.5 * (next - coeff_bound_unchecked(spec, n + 2));
            if bound < tol {
                let midpoint = sum + if n % 2 == 1 { -0.5 * next } else { 0.5 * next };
                return (midpoint, bound);
            }
            n += 1;
        }
    }

    #[test]
    fn class_parameter_validation() {
        assert!(ClassSpec::ph0_alpha(0.0).is_ok());
        assert!(ClassSpec::ph0_alpha(0.999999).is_ok());
        assert!(ClassSpec::ph0_alpha(1.0).is_err());
        assert!(ClassSpec::ph0_alpha(-0.1).is_err());
        assert!(ClassSpec::ph0_m(0.0).is_err());
        assert!(ClassSpec::ph0_m(1.2).is_ok());
        assert!(ClassSpec::ph0_m(m_upper()).is_err());
        assert!(ClassSpec::wh0_alpha(0.5).is_ok());
        assert!(ClassSpec::wh0_alpha(f64::NAN).is_err());
    }

    #[test]
    fn coeff_bound_examples() {
        let p = ClassSpec::ph0_alpha(0.5).unwrap();
        assert_abs_diff_eq!(coeff_bound(&p, 2).unwrap(), 0.5);
        let m = ClassSpec::ph0_m(0.25).unwrap();
        assert_abs_diff_eq!(coeff_bound(&m, 2).unwrap(), 0.25);
        // At alpha = 0 the W-class bound collapses to 2/n.
        let w = ClassSpec::wh0_alpha(0.0).unwrap();
        let p0 = ClassSpec::ph0_alpha(0.0).unwrap();
        for n in 2..40 {
            assert_abs_diff_eq!(
                coeff_bound(&w, n).unwrap(),
                coeff_bound(&p0, n).unwrap(),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn coeff_bound_rejects_n_below_two() {
        let p = ClassSpec::ph0_alpha(0.5).unwrap();
        assert!(matches!(coeff_bound(&p, 1), Err(Error::Domain(_))));
        assert!(matches!(coeff_bound(&p, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn coeff_bound_strictly_decreasing_in_n() {
        for spec in [
            ClassSpec::ph0_alpha(0.0).unwrap(),
            ClassSpec::ph0_alpha(0.7).unwrap(),
            ClassSpec::ph0_m(0.2).unwrap(),
            ClassSpec::ph0_m(1.2).unwrap(),
            ClassSpec::wh0_alpha(0.0).unwrap(),
            ClassSpec::wh0_alpha(0.9).unwrap(),
        ] {
            for n in 2..200 {
                assert!(
                    coeff_bound_unchecked(&spec, n + 1) < coeff_bound_unchecked(&spec, n),
                    "{spec:?} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn growth_vanishes_at_zero() {
        for spec in [
            ClassSpec::ph0_alpha(0.3).unwrap(),
            ClassSpec::ph0_m(0.4).unwrap(),
            ClassSpec::wh0_alpha(0.6).unwrap(),
        ] {
            assert_eq!(growth_upper(&spec, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn growth_rejects_radius_outside_unit_interval() {
        let p = ClassSpec::ph0_alpha(0.3).unwrap();
        assert!(matches!(growth_upper(&p, 1.0), Err(Error::Domain(_))));
        assert!(matches!(growth_upper(&p, -0.1), Err(Error::Domain(_))));
    }

    #[test]
    fn growth_closed_form_example() {
        // alpha = 0, r = 1/2: F(r) = r - 2(r + ln(1-r)) = 2 ln 2 - 1/2.
        let p = ClassSpec::ph0_alpha(0.0).unwrap();
        assert_abs_diff_eq!(
            growth_upper(&p, 0.5).unwrap(),
            2.0 * LN_2 - 0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn growth_w_class_coincides_with_first_class_at_alpha_zero() {
        let w = ClassSpec::wh0_alpha(0.0).unwrap();
        let p = ClassSpec::ph0_alpha(0.0).unwrap();
        for k in 1..=9 {
            let r = k as f64 / 10.0;
            assert_abs_diff_eq!(
                growth_upper(&w, r).unwrap(),
                growth_upper(&p, r).unwrap(),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn growth_matches_brute_force_summation() {
        for spec in [
            ClassSpec::ph0_alpha(0.25).unwrap(),
            ClassSpec::ph0_m(0.8).unwrap(),
            ClassSpec::wh0_alpha(0.4).unwrap(),
        ] {
            for k in 1..=9 {
                let r = k as f64 / 10.0;
                let mut brute = r;
                let mut p = r;
                for n in 2..4000 {
                    p *= r;
                    brute += coeff_bound_unchecked(&spec, n) * p;
                }
                let got = growth_upper_with_tail(&spec, r, 1e-13).unwrap();
                assert!(
                    (got.value - brute).abs() <= got.tail + 1e-10,
                    "{spec:?} r = {r}"
                );
                assert!(got.value >= r);
            }
        }
    }

    #[test]
    fn distance_examples() {
        let p0 = ClassSpec::ph0_alpha(0.0).unwrap();
        assert_abs_diff_eq!(distance_lower_bound(&p0), 2.0 * LN_2 - 1.0, epsilon = 1e-15);

        // The 2(1-alpha) factor vanishes in the alpha -> 1 limit.
        let p1 = ClassSpec::ph0_alpha(1.0 - 1e-12).unwrap();
        assert_abs_diff_eq!(distance_lower_bound(&p1), 1.0, epsilon = 1e-11);

        let m = ClassSpec::ph0_m(0.5).unwrap();
        assert_abs_diff_eq!(
            distance_lower_bound(&m),
            1.0 + (1.0 - 2.0 * LN_2),
            epsilon = 1e-15
        );

        let w0 = ClassSpec::wh0_alpha(0.0).unwrap();
        assert_abs_diff_eq!(
            distance_lower_bound(&w0),
            distance_lower_bound(&p0),
            epsilon = 1e-12
        );
    }

    #[test]
    fn distance_positive_across_validity_ranges() {
        for k in 0..100 {
            let alpha = k as f64 / 100.0;
            assert!(distance_lower_bound(&ClassSpec::ph0_alpha(alpha).unwrap()) > 0.0);
            assert!(distance_lower_bound(&ClassSpec::wh0_alpha(alpha).unwrap()) > 0.0);
            let m = m_upper() * (k as f64 + 0.5) / 100.0;
            assert!(distance_lower_bound(&ClassSpec::ph0_m(m).unwrap()) > 0.0);
        }
    }

    #[test]
    fn distance_matches_alternating_oracle() {
        for spec in [
            ClassSpec::ph0_alpha(0.3).unwrap(),
            ClassSpec::ph0_m(0.7).unwrap(),
            ClassSpec::wh0_alpha(0.0).unwrap(),
            ClassSpec::wh0_alpha(0.3).unwrap(),
            ClassSpec::wh0_alpha(0.7).unwrap(),
        ] {
            let (oracle, bound) = distance_oracle(&spec, 1e-10);
            let got = distance_lower_bound_with_tail(&spec, 1e-12);
            assert!(
                (got.value - oracle).abs() <= bound + got.tail + 1e-10,
                "{spec:?}: got {} oracle {oracle}",
                got.value
            );
        }
        // At alpha = 0 the series value is also pinned exactly by the first
        // class's closed form.
        let w0 = ClassSpec::wh0_alpha(0.0).unwrap();
        assert_abs_diff_eq!(
            distance_lower_bound(&w0),
            2.0 * LN_2 - 1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn extremal_sequence_attains_bounds() {
        let p = ClassSpec::ph0_alpha(0.5).unwrap();
        let seq = extremal_sequence(&p, 3);
        assert_eq!(seq.pairs(), &[(1.0, 0.0), (0.5, 0.0), (1.0 / 3.0, 0.0)]);

        let m = ClassSpec::ph0_m(0.2).unwrap();
        let seq = extremal_sequence(&m, 2);
        assert_eq!(seq.pairs(), &[(1.0, 0.0), (0.2, 0.0)]);

        let w = ClassSpec::wh0_alpha(0.8).unwrap();
        assert_eq!(extremal_sequence(&w, 1).pairs(), &[(1.0, 0.0)]);

        for spec in [p, m, w] {
            let seq = extremal_sequence(&spec, 50);
            assert!(seq.is_admissible(&spec));
            for n in 2..=50 {
                assert_eq!(seq.magnitude_sum(n), coeff_bound_unchecked(&spec, n));
            }
        }
    }

    #[test]
    fn coefficient_sequence_enforces_normalization() {
        assert!(CoefficientSequence::new(vec![(1.0, 0.0), (0.3, 0.1)]).is_ok());
        assert!(CoefficientSequence::new(vec![(0.9, 0.0)]).is_err());
        assert!(CoefficientSequence::new(vec![]).is_err());
        assert!(CoefficientSequence::new(vec![(1.0, 0.0), (-0.1, 0.0)]).is_err());
    }
}
