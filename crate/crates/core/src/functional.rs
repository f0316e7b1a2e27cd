//! The refined Bohr-Rogosinski functional and the class-wise majorant whose
//! unique zero on (0, 1) is the sharp radius.
//!
//! For a harmonic mapping with coefficient magnitudes `|a_n| + |b_n|`, the
//! functional is
//!
//! ```text
//! S(r) = |f(z)|^m + sum_{n>=N} (|a_n|+|b_n|) r^n
//!      + mu  * [t>=1] * sum_{n=1..t} (|a_n|+|b_n|)^2 * r^N/(1-r)
//!      + lambda * (1 + r/(1-r)) * sum_{n>t} (|a_n|+|b_n|)^2 r^2n
//! ```
//!
//! with `t = floor((N-1)/2)`. Replacing every coefficient by its class bound
//! and `|f(z)|` by the growth envelope, then subtracting the distance lower
//! bound, gives the majorant [`Majorant`]; it is negative at 0, strictly
//! increasing, and its root is the radius up to which `S <= d` holds for the
//! whole class.

use crate::classes::{
    coeff_bound_unchecked, distance_lower_bound_with_tail, growth_upper_with_tail, ClassKind,
    ClassSpec, CoefficientSequence,
};
use crate::error::{Error, Result};
use crate::specfun::{li2, sum_geometric_tail};
use std::f64::consts::LN_2;

/// Summation tolerance used inside majorant evaluations. The bisection
/// solver works at 1e-12 and wants function values an order sharper.
const INNER_TOL: f64 = 1e-14;

/// Tolerance for the r-independent distance series. The harmonic-like decay
/// of the W-class terms makes this the most expensive summation; 1e-13 keeps
/// it two orders below every acceptance tolerance while staying fast.
const DISTANCE_TOL: f64 = 1e-13;

/// The `(m, N, mu, lambda)` tuple parameterizing the functional, with the
/// derived split index `t = floor((N-1)/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalParams {
    m: u32,
    n_start: u32,
    mu: f64,
    lambda: f64,
}

impl FunctionalParams {
    pub fn new(m: u32, n_start: u32, mu: f64, lambda: f64) -> Result<Self> {
        // powers are taken with powi(i32)
        if !(1..=i32::MAX as u32).contains(&m) {
            return Err(Error::InvalidArgument("m must be >= 1".into()));
        }
        if !(1..=i32::MAX as u32).contains(&n_start) {
            return Err(Error::InvalidArgument("N must be >= 1".into()));
        }
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "mu must be finite and >= 0, got {mu}"
            )));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "lambda must be finite and >= 0, got {lambda}"
            )));
        }
        Ok(FunctionalParams {
            m,
            n_start,
            mu,
            lambda,
        })
    }

    /// Exponent applied to the modulus term.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Start index N of the linear coefficient sum.
    pub fn n_start(&self) -> u32 {
        self.n_start
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Split index `t = floor((N-1)/2)`; the mu-refinement is present only
    /// when t >= 1 (N >= 3).
    pub fn t(&self) -> u32 {
        (self.n_start - 1) / 2
    }
}

/// How the n = 1 terms of the three sums are treated when the functional is
/// majorized over a class.
///
/// The normalized first coefficient is exactly 1, while the class bound
/// formulas evaluated at n = 1 give 2(1-alpha), 2M/0 (singular), and 2.
/// `ExactA1` uses the exact value everywhere; it is the convention under
/// which the low-order closed forms agree with the general evaluator and the
/// root identity on the extremal function holds exactly. `PaperLiteral`
/// applies the bound formulas even at n = 1 and is kept as an audit mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    ExactA1,
    PaperLiteral,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::ExactA1 => "exact-a1",
            Convention::PaperLiteral => "paper-literal",
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!(
            "radius must lie in [0, 1) (the factor r^N/(1-r) diverges at 1), got {r}"
        )));
    }
    Ok(())
}

/// Evaluates the functional S on an explicit truncated coefficient sequence.
///
/// `modulus` is the caller's value for `|f(z)|`: class-level majorization
/// bounds it by the growth envelope while the sharpness checks use the
/// extremal series value at z = r, and keeping it an input keeps both uses
/// honest. The result is exact for the truncated sequence; a rigorous bound
/// on what an admissible continuation beyond `n_max` could add is available
/// from [`eval_s_tail_budget`].
pub fn eval_s(
    seq: &CoefficientSequence,
    params: &FunctionalParams,
    r: f64,
    modulus: f64,
) -> Result<f64> {
    check_radius(r)?;
    if !(modulus >= 0.0) {
        return Err(Error::Domain(format!(
            "modulus must be >= 0, got {modulus}"
        )));
    }
    let n_max = seq.n_max();
    let t = params.t() as usize;
    let n_start = params.n_start() as usize;

    let mut linear = 0.0;
    let mut p = r.powi(n_start as i32);
    for n in n_start..=n_max {
        linear += seq.magnitude_sum(n) * p;
        p *= r;
    }

    let mut refined = 0.0;
    if t >= 1 {
        let mut squares = 0.0;
        for n in 1..=t.min(n_max) {
            squares += seq.magnitude_sum(n).powi(2);
        }
        refined += params.mu() * squares * r.powi(n_start as i32) / (1.0 - r);
    }

    let rr = r * r;
    let mut squared = 0.0;
    let mut q = rr.powi((t + 1) as i32);
    for n in (t + 1)..=n_max {
        squared += seq.magnitude_sum(n).powi(2) * q;
        q *= rr;
    }
    refined += params.lambda() * squared / (1.0 - r);

    Ok(modulus.powi(params.m() as i32) + linear + refined)
}

/// Rigorous bound on how much S could grow if a class-admissible sequence
/// were extended beyond `n_max` (the modulus input is the caller's and is
/// not covered). Requires `n_max >= max(N, t)`.
pub fn eval_s_tail_budget(
    spec: &ClassSpec,
    params: &FunctionalParams,
    r: f64,
    n_max: usize,
) -> Result<f64> {
    check_radius(r)?;
    let t = params.t() as usize;
    if n_max < (params.n_start() as usize).max(t) {
        return Err(Error::InvalidArgument(format!(
            "tail budget needs n_max >= max(N, t), got n_max = {n_max}"
        )));
    }
    let c_next = coeff_bound_unchecked(spec, n_max + 1);
    let linear_tail = c_next * r.powi(n_max as i32 + 1) / (1.0 - r);
    let squared_tail = c_next * c_next * (r * r).powi(n_max as i32 + 1) / (1.0 - r * r);
    Ok(linear_tail + params.lambda() * squared_tail / (1.0 - r))
}

// ---- closed-form series pieces -------------------------------------------

/// sum_{n=1}^{k-1} r^n / n
fn partial_power_over_n(k: usize, r: f64) -> f64 {
    let mut s = 0.0;
    let mut p = 1.0;
    for n in 1..k {
        p *= r;
        s += p / n as f64;
    }
    s
}

/// sum_{n=1}^{k-1} x^n / n^2
fn partial_power_over_n2(k: usize, x: f64) -> f64 {
    let mut s = 0.0;
    let mut p = 1.0;
    for n in 1..k {
        p *= x;
        s += p / ((n * n) as f64);
    }
    s
}

/// sum_{n=2}^{k-1} r^n / (n(n-1))
fn partial_power_over_nn1(k: usize, r: f64) -> f64 {
    let mut s = 0.0;
    let mut p = r;
    for n in 2..k {
        p *= r;
        s += p / ((n * (n - 1)) as f64);
    }
    s
}

/// sum_{n=2}^{k-1} x^n / (n^2 (n-1)^2)
fn partial_power_over_nn1_sq(k: usize, x: f64) -> f64 {
    let mut s = 0.0;
    let mut p = x;
    for n in 2..k {
        p *= x;
        // n^4-sized denominator; keep it in floating point
        let nf = n as f64;
        s += p / (nf * nf * (nf - 1.0) * (nf - 1.0));
    }
    s
}

/// sum_{n>=2} x^n / (n^2 (n-1)^2) = (x+1) Li2(x) + 2(x-1) ln(1-x) - 3x
fn squared_series_nn1(x: f64) -> Result<f64> {
    Ok((x + 1.0) * li2(x)? + 2.0 * (x - 1.0) * (1.0 - x).ln() - 3.0 * x)
}

// ---- numeric series for the W class ---------------------------------------

/// sum_{n>=start} c(n) r^n for the W class, start >= 2.
fn w_linear_from(spec: &ClassSpec, start: usize, r: f64) -> Result<f64> {
    let spec = *spec;
    Ok(sum_geometric_tail(|n| coeff_bound_unchecked(&spec, n), r, start, INNER_TOL)?.value)
}

/// sum_{n>=start} c(n)^2 r^(2n) for the W class, start >= 2.
fn w_squared_from(spec: &ClassSpec, start: usize, r: f64) -> Result<f64> {
    let spec = *spec;
    Ok(sum_geometric_tail(
        |n| coeff_bound_unchecked(&spec, n).powi(2),
        r * r,
        start,
        INNER_TOL,
    )?
    .value)
}

// ---- the majorant ----------------------------------------------------------

/// The class majorant of S minus the distance lower bound, with the
/// r-independent pieces (distance, mu-sum of squared bounds) precomputed.
///
/// Negative at r = 0, strictly increasing, positive before r reaches 1; its
/// unique zero is the sharp radius.
#[derive(Debug, Clone)]
pub struct Majorant {
    spec: ClassSpec,
    params: FunctionalParams,
    conv: Convention,
    distance: f64,
    mu_sum: f64,
}

impl Majorant {
    pub fn new(spec: ClassSpec, params: FunctionalParams, conv: Convention) -> Result<Self> {
        let t = params.t() as usize;
        let mu_sum = if t == 0 {
            0.0
        } else {
            match conv {
                Convention::ExactA1 => {
                    // exact (|a_1|+|b_1|)^2 = 1, class bounds from n = 2 on
                    let mut s = 1.0;
                    for n in 2..=t {
                        s += coeff_bound_unchecked(&spec, n).powi(2);
                    }
                    s
                }
                Convention::PaperLiteral => {
                    if spec.kind() == ClassKind::PH0M {
                        return Err(Error::Convention(
                            "paper-literal is undefined for ph0-m when t >= 1: the bound \
                             formula 1/(n^2 (n-1)^2) is singular at n = 1; use exact-a1"
                                .into(),
                        ));
                    }
                    // the bound formula applied from n = 1 on
                    let mut s = 0.0;
                    for n in 1..=t {
                        s += coeff_bound_unchecked(&spec, n).powi(2);
                    }
                    s
                }
            }
        };
        let distance = distance_lower_bound_with_tail(&spec, DISTANCE_TOL).value;
        Ok(Majorant {
            spec,
            params,
            conv,
            distance,
            mu_sum,
        })
    }

    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    pub fn params(&self) -> &FunctionalParams {
        &self.params
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    /// The distance lower bound d subtracted inside the majorant.
    pub fn distance(&self) -> f64 {
        self.distance
    }

    /// Evaluates the majorant at r in [0, 1).
    pub fn eval(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        let n_start = self.params.n_start() as usize;
        let t = self.params.t() as usize;
        let alpha_factor = match self.spec.kind() {
            ClassKind::PH0Alpha => 2.0 * (1.0 - self.spec.param()),
            ClassKind::PH0M => 2.0 * self.spec.param(),
            ClassKind::WH0Alpha => 0.0,
        };

        let growth = growth_upper_with_tail(&self.spec, r, INNER_TOL)?.value;

        // linear sum from N, with the n = 1 term by convention when N = 1
        let linear = match self.spec.kind() {
            ClassKind::PH0Alpha => {
                let from = |k: usize| alpha_factor * (-(1.0 - r).ln() - partial_power_over_n(k, r));
                match (n_start, self.conv) {
                    (1, Convention::ExactA1) => r + from(2),
                    (1, Convention::PaperLiteral) => from(1),
                    (k, _) => from(k),
                }
            }
            ClassKind::PH0M => {
                let base = r + (1.0 - r) * (1.0 - r).ln();
                let from = |k: usize| alpha_factor * (base - partial_power_over_nn1(k, r));
                match (n_start, self.conv) {
                    (1, Convention::ExactA1) => r + from(2),
                    // the literal closed form starts at n = 2 either way
                    (1, Convention::PaperLiteral) => from(2),
                    (k, _) => from(k),
                }
            }
            ClassKind::WH0Alpha => match (n_start, self.conv) {
                (1, Convention::ExactA1) => r + w_linear_from(&self.spec, 2, r)?,
                (1, Convention::PaperLiteral) => 2.0 * r + w_linear_from(&self.spec, 2, r)?,
                (k, _) => w_linear_from(&self.spec, k, r)?,
            },
        };

        let refine = 1.0 / (1.0 - r);
        let mu_term = if t >= 1 {
            self.params.mu() * self.mu_sum * r.powi(n_start as i32) * refine
        } else {
            0.0
        };

        // squared sum from t+1, with the n = 1 term by convention when t = 0
        let squared = if self.params.lambda() == 0.0 {
            0.0
        } else {
            let rr = r * r;
            let from = |k: usize| -> Result<f64> {
                match self.spec.kind() {
                    ClassKind::PH0Alpha => Ok(alpha_factor
                        * alpha_factor
                        * (li2(rr)? - partial_power_over_n2(k, rr))),
                    ClassKind::PH0M => Ok(alpha_factor
                        * alpha_factor
                        * (squared_series_nn1(rr)? - partial_power_over_nn1_sq(k, rr))),
                    ClassKind::WH0Alpha => w_squared_from(&self.spec, k, r),
                }
            };
            let sum = if t >= 1 {
                from(t + 1)?
            } else {
                let first = match (self.conv, self.spec.kind()) {
                    (Convention::ExactA1, _) => rr,
                    (Convention::PaperLiteral, ClassKind::PH0Alpha) => {
                        alpha_factor * alpha_factor * rr
                    }
                    // the literal closed form omits the n = 1 contribution
                    (Convention::PaperLiteral, ClassKind::PH0M) => 0.0,
                    (Convention::PaperLiteral, ClassKind::WH0Alpha) => 4.0 * rr,
                };
                first + from(2)?
            };
            self.params.lambda() * sum * refine
        };

        Ok(growth.powi(self.params.m() as i32) + linear + mu_term + squared - self.distance)
    }
}

/// One-shot evaluation of the class majorant; see [`Majorant`] for repeated
/// evaluations with the r-independent pieces reused.
pub fn phi(spec: &ClassSpec, params: &FunctionalParams, conv: Convention, r: f64) -> Result<f64> {
    Majorant::new(*spec, *params, conv)?.eval(r)
}

/// Closed forms of the majorant specialized to N in 1..4, assembled piece by
/// piece rather than through the general evaluator, so the two routes
/// cross-check each other. mu multiplies the r^3/(1-r) and r^4/(1-r)
/// refinement terms in every class, and all n = 1 terms use the exact
/// normalized coefficient values.
pub fn phi_corollary(
    spec: &ClassSpec,
    m: u32,
    n_start: u32,
    mu: f64,
    lambda: f64,
    r: f64,
) -> Result<f64> {
    if !(1..=4).contains(&n_start) {
        return Err(Error::Domain(format!(
            "the corollary closed forms cover N in 1..4, got {n_start}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidArgument("m must be >= 1".into()));
    }
    check_radius(r)?;
    let rr = r * r;
    let refine = 1.0 + r / (1.0 - r);

    match spec.kind() {
        ClassKind::PH0Alpha => {
            let a = 2.0 * (1.0 - spec.param());
            let growth = r - a * (r + (1.0 - r).ln());
            // growth^m minus the distance lower bound
            let offset = growth.powi(m as i32) - 1.0 - a * (std::f64::consts::LN_2 - 1.0);
            let log_remainder = r + (1.0 - r).ln();
            let sq_full = rr + a * a * (li2(rr)? - rr);
            Ok(match n_start {
                1 => r - a * log_remainder + offset + lambda * refine * sq_full,
                2 => -a * log_remainder + offset + lambda * refine * sq_full,
                3 => {
                    -a * (log_remainder + rr / 2.0)
                        + offset
                        + mu * r.powi(3) / (1.0 - r)
                        + lambda * refine * (sq_full - rr)
                }
                _ => {
                    -a * (log_remainder + rr / 2.0 + r.powi(3) / 3.0)
                        + offset
                        + mu * r.powi(4) / (1.0 - r)
                        + lambda * refine * (sq_full - rr)
                }
            })
        }
        ClassKind::PH0M => {
            let a = 2.0 * spec.param();
            let lin_base = r + (1.0 - r) * (1.0 - r).ln();
            let growth = r + a * lin_base;
            let offset = growth.powi(m as i32) - 1.0 - a * (1.0 - 2.0 * LN_2);
            let sq_full = rr + a * a * squared_series_nn1(rr)?;
            Ok(match n_start {
                1 => r + a * lin_base + offset + lambda * refine * sq_full,
                2 => a * lin_base + offset + lambda * refine * sq_full,
                3 => {
                    a * (lin_base - rr / 2.0)
                        + offset
                        + mu * r.powi(3) / (1.0 - r)
                        + lambda * refine * (sq_full - rr)
                }
                _ => {
                    a * (lin_base - rr / 2.0 - r.powi(3) / 6.0)
                        + offset
                        + mu * r.powi(4) / (1.0 - r)
                        + lambda * refine * (sq_full - rr)
                }
            })
        }
        ClassKind::WH0Alpha => {
            let growth = r + w_linear_from(spec, 2, r)?;
            let offset =
                growth.powi(m as i32) - distance_lower_bound_with_tail(spec, DISTANCE_TOL).value;
            let sq_from2 = w_squared_from(spec, 2, r)?;
            Ok(match n_start {
                1 => r + w_linear_from(spec, 2, r)? + offset + lambda * refine * (rr + sq_from2),
                2 => w_linear_from(spec, 2, r)? + offset + lambda * refine * (rr + sq_from2),
                3 => {
                    w_linear_from(spec, 3, r)?
                        + offset
                        + mu * r.powi(3) / (1.0 - r)
                        + lambda * refine * sq_from2
                }
                _ => {
                    w_linear_from(spec, 4, r)?
                        + offset
                        + mu * r.powi(4) / (1.0 - r)
                        + lambda * refine * sq_from2
                }
            })
        }
    }
}
