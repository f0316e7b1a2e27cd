//! Dilogarithm evaluation and tail-bounded series summation.
//!
//! Every majorant in this crate is a power series with positive decreasing
//! coefficients, or an alternating series with decreasing convex terms. The
//! two summation routines here return a [`TailBound`]: a partial sum together
//! with a rigorous bound on everything that was left out.

use crate::error::{Error, Result};

/// pi^2 / 6, the dilogarithm at 1.
pub const PI_SQ_OVER_6: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Hard cap on summation length. Series in this crate converge geometrically
/// for arguments bounded away from 1; the cap only matters for diagnostic
/// evaluations extremely close to the boundary, where the achieved tail is
/// reported honestly instead of looping forever.
const MAX_TERMS: usize = 30_000_000;

/// A partial sum paired with a rigorous bound on the omitted terms.
///
/// The true infinite sum lies in `[value - tail, value + tail]`. When
/// `nonnegative` is set, every omitted term is >= 0 and the enclosure
/// sharpens to the one-sided `[value, value + tail]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    /// The computed partial sum.
    pub value: f64,
    /// Bound on the magnitude of the omitted remainder, >= 0.
    pub tail: f64,
    /// Number of terms that went into `value`.
    pub terms_used: usize,
    /// True when all omitted terms are known to be nonnegative.
    pub nonnegative: bool,
}

/// Real dilogarithm `Li2(x) = sum_{n>=1} x^n / n^2` for `-1 <= x <= 1`.
///
/// Branches: direct summation on `[0, 1/2]` (geometric tail bound), the
/// reflection identity `Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x)` on
/// `(1/2, 1)`, the constant `pi^2/6` at 1, and alternating summation on
/// `[-1, 0)`. Absolute error is below 1e-14 across the domain.
pub fn li2(x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "li2 requires -1 <= x <= 1, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(PI_SQ_OVER_6);
    }
    if x < 0.0 {
        // sum (-1)^n |x|^n / n^2 = -sum (-1)^(n-1) |x|^n / n^2
        let y = -x;
        let series = sum_alternating(|n| y.powi(n as i32) / ((n * n) as f64), 1, 1e-15)?;
        return Ok(-series.value);
    }
    if x <= 0.5 {
        return Ok(li2_small(x));
    }
    // Reflection: 1 - x lies in [0, 1/2) where the series converges fast.
    let y = 1.0 - x;
    Ok(PI_SQ_OVER_6 - x.ln() * y.ln() - li2_small(y))
}

/// Direct series for `0 <= x <= 1/2`. The tail after K terms is bounded by
/// `x^(K+1) / ((K+1)^2 (1-x))`; terms are accumulated smallest-first.
fn li2_small(x: f64) -> f64 {
    debug_assert!((0.0..=0.5).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    let mut terms = [0.0f64; 64];
    let mut p = 1.0;
    let mut k = 0;
    while k < 64 {
        p *= x;
        terms[k] = p / (((k + 1) * (k + 1)) as f64);
        let bound = p * x / (((k + 2) * (k + 2)) as f64 * (1.0 - x));
        if bound < 2.5e-17 {
            k += 1;
            break;
        }
        k += 1;
    }
    terms[..k].iter().rev().sum()
}

/// Sums `sum_{n>=start} coeff(n) * ratio^n` with a geometric tail bound.
///
/// Requires `0 <= ratio < 1` and `|coeff(n)|` nonincreasing for `n >= start`,
/// so the remainder after the K-th term is bounded by
/// `|coeff(K+1)| * ratio^(K+1) / (1 - ratio)`. Terminates once that bound
/// drops to `tol`; if the term cap is reached first, the achieved bound is
/// returned in `tail` (it may then exceed `tol`).
pub fn sum_geometric_tail<F>(coeff: F, ratio: f64, start: usize, tol: f64) -> Result<TailBound>
where
    F: Fn(usize) -> f64,
{
    if !(0.0..1.0).contains(&ratio) {
        return Err(Error::NonConvergent(format!(
            "geometric tail bound needs ratio in [0, 1), got {ratio}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut p = ratio.powi(start as i32);
    if p == 0.0 {
        return Ok(TailBound {
            value: 0.0,
            tail: 0.0,
            terms_used: 0,
            nonnegative: true,
        });
    }
    let mut sum = 0.0;
    let mut nonnegative = true;
    let mut n = start;
    loop {
        let c = coeff(n);
        sum += c * p;
        nonnegative &= c >= 0.0;
        p *= ratio;
        let tail = coeff(n + 1).abs() * p / (1.0 - ratio);
        let terms_used = n - start + 1;
        if tail <= tol || terms_used >= MAX_TERMS || p == 0.0 {
            return Ok(TailBound {
                value: sum,
                tail,
                terms_used,
                nonnegative,
            });
        }
        n += 1;
    }
}

/// Sums the alternating series `sum_{n>=start} (-1)^(n-1) * magnitude(n)`.
///
/// Requires `magnitude` positive, decreasing, and convex from `start` on.
/// Consecutive partial sums bracket the limit, so the returned value is their
/// midpoint `S_K + (-1)^K m(K+1)/2`, whose error is bounded by
/// `(m(K+1) - m(K+2)) / 2` - one order better than the plain first-omitted-term
/// rule, which is what makes slowly decaying distance series (terms ~ 1/n)
/// summable to 1e-12.
pub fn sum_alternating<F>(magnitude: F, start: usize, tol: f64) -> Result<TailBound>
where
    F: Fn(usize) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let sign = |n: usize| if n % 2 == 1 { 1.0 } else { -1.0 };
    let mut sum = 0.0;
    let mut m_cur = magnitude(start);
    let mut m_next = magnitude(start + 1);
    let mut n = start;
    loop {
        sum += sign(n) * m_cur;
        let m_after = magnitude(n + 2);
        if m_next > m_cur {
            return Err(Error::NonConvergent(format!(
                "alternating magnitudes must be decreasing (m({}) = {m_cur} < m({}) = {m_next})",
                n,
                n + 1
            )));
        }
        let half_gap = 0.5 * (m_next - m_after);
        let terms_used = n - start + 1;
        if half_gap.abs() <= tol || terms_used >= MAX_TERMS {
            return Ok(TailBound {
                value: sum + sign(n + 1) * 0.5 * m_next,
                tail: half_gap.abs(),
                terms_used,
                nonnegative: false,
            });
        }
        m_cur = m_next;
        m_next = m_after;
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Brute-force dilogarithm oracle: plain forward summation with the
    /// geometric tail bound, independent of the branchy implementation.
    fn li2_oracle(x: f64, tol: f64) -> (f64, f64) {
        assert!((0.0..1.0).contains(&x));
        let mut sum = 0.0;
        let mut p = 1.0;
        for n in 1..1_000_000 {
            p *= x;
            sum += p / ((n * n) as f64);
            let tail = p * x / (((n + 1) * (n + 1)) as f64 * (1.0 - x));
            if tail < tol {
                return (sum, tail);
            }
        }
        panic!("oracle did not converge");
    }

    #[test]
    fn li2_at_zero_and_one() {
        assert_eq!(li2(0.0).unwrap(), 0.0);
        assert_eq!(li2(1.0).unwrap(), PI_SQ_OVER_6);
    }

    #[test]
    fn li2_at_half_matches_closed_form() {
        // Forced by the reflection identity at r = 1/2.
        let expected = PI_SQ_OVER_6 / 2.0 - 0.5 * std::f64::consts::LN_2.powi(2);
        assert_abs_diff_eq!(li2(0.5).unwrap(), expected, epsilon = 1e-15);
    }

    #[test]
    fn li2_agrees_with_partial_sum_oracle() {
        let (oracle, tail) = li2_oracle(0.25, 1e-15);
        assert!((li2(0.25).unwrap() - oracle).abs() <= tail + 1e-13);
        for &x in &[0.1, 0.3, 0.49, 0.51, 0.7, 0.9, 0.99] {
            let (oracle, tail) = li2_oracle(x, 1e-15);
            assert!(
                (li2(x).unwrap() - oracle).abs() <= tail + 1e-13,
                "x = {x}"
            );
        }
    }

    #[test]
    fn li2_at_minus_one() {
        assert_abs_diff_eq!(li2(-1.0).unwrap(), -PI_SQ_OVER_6 / 2.0, epsilon = 1e-13);
    }

    #[test]
    fn li2_square_identity_covers_negative_arguments() {
        // Li2(x^2) = 2 (Li2(x) + Li2(-x)) ties the negative branch to the
        // positive one.
        for k in 1..19 {
            let x = k as f64 / 20.0;
            let lhs = li2(x * x).unwrap();
            let rhs = 2.0 * (li2(x).unwrap() + li2(-x).unwrap());
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-13);
        }
    }

    #[test]
    fn li2_rejects_arguments_outside_unit_interval() {
        assert!(matches!(li2(1.0 + 1e-9), Err(Error::Domain(_))));
        assert!(matches!(li2(-1.0 - 1e-9), Err(Error::Domain(_))));
        assert!(matches!(li2(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn li2_reflection_identity_residual() {
        for k in 0..200 {
            let r = 0.001 + (0.999 - 0.001) * (k as f64 + 0.5) / 200.0;
            let residual =
                li2(r).unwrap() + li2(1.0 - r).unwrap() - PI_SQ_OVER_6 + r.ln() * (1.0 - r).ln();
            assert!(residual.abs() < 1e-12, "r = {r}, residual = {residual}");
        }
    }

    #[test]
    fn li2_continuous_at_endpoints() {
        // Li2(1 - eps) -> pi^2/6 and Li2(eps) -> 0.
        assert_abs_diff_eq!(li2(1.0 - 1e-12).unwrap(), PI_SQ_OVER_6, epsilon = 1e-10);
        assert_abs_diff_eq!(li2(1e-12).unwrap(), 0.0, epsilon = 2e-12);
    }

    #[test]
    fn li2_monotone_on_unit_interval() {
        let mut prev = 0.0;
        for k in 1..=100 {
            let x = k as f64 / 100.0;
            let v = li2(x).unwrap();
            assert!(v >= prev, "li2 not monotone at {x}");
            prev = v;
        }
    }

    #[test]
    fn geometric_sum_of_halves_is_one() {
        let s = sum_geometric_tail(|_| 1.0, 0.5, 1, 1e-12).unwrap();
        assert_abs_diff_eq!(s.value, 1.0, epsilon = 1e-12 + s.tail);
        assert!(s.nonnegative);
    }

    #[test]
    fn geometric_sum_cross_checks_li2() {
        let s = sum_geometric_tail(|n| 1.0 / ((n * n) as f64), 0.9, 1, 1e-13).unwrap();
        assert!((s.value - li2(0.9).unwrap()).abs() <= s.tail + 1e-13);
    }

    #[test]
    fn geometric_sum_rejects_ratio_one() {
        assert!(matches!(
            sum_geometric_tail(|_| 1.0, 1.0, 1, 1e-12),
            Err(Error::NonConvergent(_))
        ));
    }

    #[test]
    fn alternating_sum_hits_log_two_series() {
        // sum_{n>=2} 2 (-1)^(n-1) / n = 2 (ln 2 - 1)
        let s = sum_alternating(|n| 2.0 / n as f64, 2, 1e-12).unwrap();
        let expected = 2.0 * (std::f64::consts::LN_2 - 1.0);
        assert!((s.value - expected).abs() <= 1e-12 + s.tail);
    }

    #[test]
    fn alternating_sum_rejects_growing_magnitudes() {
        assert!(matches!(
            sum_alternating(|n| n as f64, 1, 1e-12),
            Err(Error::NonConvergent(_))
        ));
    }

    #[test]
    fn tail_bounds_enclose_sharper_recomputation() {
        // A 10x more precise recomputation must stay inside the coarse tail.
        let coarse = sum_geometric_tail(|n| 1.0 / n as f64, 0.8, 1, 1e-8).unwrap();
        let fine = sum_geometric_tail(|n| 1.0 / n as f64, 0.8, 1, 1e-9).unwrap();
        assert!((fine.value - coarse.value).abs() <= coarse.tail);

        let coarse = sum_alternating(|n| 1.0 / n as f64, 2, 1e-8).unwrap();
        let fine = sum_alternating(|n| 1.0 / n as f64, 2, 1e-9).unwrap();
        assert!((fine.value - coarse.value).abs() <= coarse.tail);
    }
}
