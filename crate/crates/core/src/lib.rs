//! Sharp refined Bohr-Rogosinski radii for classes of harmonic mappings.
//!
//! For three classes of normalized harmonic mappings on the unit disk -
//! defined by `Re(h' - alpha) > |g'|`, by `Re(z h'') > -M + |z g''|`, and by
//! `Re(h' + alpha z h'') > |g' + alpha z g''|` - this crate computes the
//! largest radius up to which the refined Bohr-Rogosinski functional of every
//! class member stays within the distance from the image of 0 to the image
//! boundary. Each radius is the unique zero of an explicit monotone majorant
//! and is found by certified bracketed bisection.
//!
//! The building blocks are exposed directly:
//!
//! - [`specfun`]: dilogarithm and tail-bounded series summation;
//! - [`classes`]: coefficient bounds, growth envelopes, distance bounds, and
//!   extremal sequences per class;
//! - [`functional`]: the functional itself, the class majorants, and the
//!   low-order closed forms;
//! - [`radius`]: the certified solver and a monotonicity audit;
//! - [`analytic`]: reference radii for the analytic (Schwarz) class, the
//!   only closed-form ground truths available;
//! - [`verify`]: brute-force oracles, sharpness checks, and seeded fuzzing
//!   of the universal quantifier.
//!
//! ```
//! use bohr_rogosinski::{ClassSpec, Convention, FunctionalParams, solve_radius};
//!
//! let spec = ClassSpec::ph0_alpha(0.0).unwrap();
//! let params = FunctionalParams::new(1, 1, 0.0, 0.0).unwrap();
//! let res = solve_radius(&spec, &params, Convention::ExactA1, 1e-12).unwrap();
//! assert!(res.radius > 0.16 && res.radius < 0.17);
//! ```

// Negated comparisons like `!(tol > 0.0)` are deliberate: they reject NaN
// along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod classes;
pub mod error;
pub mod functional;
pub mod radius;
pub mod roots;
pub mod specfun;
pub mod verify;

pub use analytic::{
    refined_r_a0, refined_r_a0_prime, rogosinski_rn, rogosinski_rn_prime, AnalyticRadiusQuery,
};
pub use classes::{
    coeff_bound, distance_lower_bound, extremal_sequence, growth_upper, ClassKind, ClassSpec,
    CoefficientSequence,
};
pub use error::{Error, Result};
pub use functional::{eval_s, phi, phi_corollary, Convention, FunctionalParams, Majorant};
pub use radius::{audit_monotone, solve_radius, RadiusResult};
pub use specfun::{li2, sum_alternating, sum_geometric_tail, TailBound};
pub use verify::{
    check_root_and_sharpness, fuzz_admissible, oracle_s_extremal, standard_lattice,
    VerificationReport,
};
