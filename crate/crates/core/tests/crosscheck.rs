//! Cross-route agreement checks: the general majorant against the published
//! low-order closed forms, the closed forms against brute-force summation,
//! and the class coincidence at alpha = 0.

use bohr_rogosinski::classes::{distance_lower_bound, ClassKind, ClassSpec};
use bohr_rogosinski::functional::{phi, phi_corollary, Convention, FunctionalParams, Majorant};
use bohr_rogosinski::verify::{default_class_params, oracle_s_extremal, standard_lattice};

fn params(m: u32, n: u32, mu: f64, lambda: f64) -> FunctionalParams {
    FunctionalParams::new(m, n, mu, lambda).unwrap()
}

#[test]
fn corollary_agrees_with_general_majorant_everywhere() {
    for kind in [ClassKind::PH0Alpha, ClassKind::PH0M, ClassKind::WH0Alpha] {
        for param in default_class_params(kind) {
            let spec = ClassSpec::new(kind, param).unwrap();
            for m in [1, 2] {
                for n in 1..=4 {
                    for mu in [0.0, 1.0] {
                        for lambda in [0.0, 1.0] {
                            let majorant =
                                Majorant::new(spec, params(m, n, mu, lambda), Convention::ExactA1)
                                    .unwrap();
                            for k in 1..=10 {
                                let r = 0.8 * k as f64 / 11.0;
                                let general = majorant.eval(r).unwrap();
                                let closed = phi_corollary(&spec, m, n, mu, lambda, r).unwrap();
                                assert!(
                                    (general - closed).abs() < 1e-9,
                                    "{} param={param} m={m} N={n} mu={mu} lambda={lambda} r={r}: \
                                     general={general} corollary={closed}",
                                    kind.name()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn first_and_third_class_coincide_at_alpha_zero() {
    // identical coefficient bounds 2/n, so the majorants agree pointwise
    let p = ClassSpec::ph0_alpha(0.0).unwrap();
    let w = ClassSpec::wh0_alpha(0.0).unwrap();
    for m in [1, 2] {
        for n in [1, 2, 3, 5, 8] {
            for (mu, lambda) in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
                let pars = params(m, n, mu, lambda);
                let mp = Majorant::new(p, pars, Convention::ExactA1).unwrap();
                let mw = Majorant::new(w, pars, Convention::ExactA1).unwrap();
                for k in 1..=9 {
                    let r = k as f64 / 10.0;
                    let vp = mp.eval(r).unwrap();
                    let vw = mw.eval(r).unwrap();
                    assert!(
                        (vp - vw).abs() < 1e-9,
                        "m={m} N={n} mu={mu} lambda={lambda} r={r}: {vp} vs {vw}"
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_equivalence_on_the_full_lattice() {
    // brute-force S on the extremal sequence equals majorant + distance at
    // every lattice point
    for (spec, pars) in standard_lattice() {
        let d = distance_lower_bound(&spec);
        let majorant = Majorant::new(spec, pars, Convention::ExactA1).unwrap();
        for r in [0.1, 0.2, 0.3] {
            let oracle = oracle_s_extremal(&spec, &pars, r, 1e-11).unwrap();
            let closed = majorant.eval(r).unwrap() + d;
            assert!(
                (oracle.value - closed).abs() <= oracle.tail + 1e-10,
                "{} param={} m={} N={} r={r}",
                spec.kind().name(),
                spec.param(),
                pars.m(),
                pars.n_start()
            );
        }
    }
}

#[test]
fn paper_literal_differs_except_at_half() {
    // For the first class the literal and exact conventions disagree at
    // t >= 1 unless 4(1-alpha)^2 = 1, i.e. alpha = 1/2.
    let pars = params(1, 5, 1.0, 0.0);
    let r = 0.4;
    for (alpha, expect_equal) in [(0.2, false), (0.5, true), (0.8, false)] {
        let spec = ClassSpec::ph0_alpha(alpha).unwrap();
        let exact = Majorant::new(spec, pars, Convention::ExactA1)
            .unwrap()
            .eval(r)
            .unwrap();
        let literal = Majorant::new(spec, pars, Convention::PaperLiteral)
            .unwrap()
            .eval(r)
            .unwrap();
        if expect_equal {
            assert!((exact - literal).abs() < 1e-12, "alpha = {alpha}");
        } else {
            assert!((exact - literal).abs() > 1e-6, "alpha = {alpha}");
        }
    }
}

#[test]
fn literal_convention_offsets_have_closed_forms() {
    // The two conventions differ only in the n = 1 terms, so their gap is an
    // explicit elementary expression per class and term.

    // first class, N = 5 (t = 2), lambda = 0: the mu-sum factor is
    // (2(1-a))^2 (1 + 1/4) literally vs 1 + (2(1-a)/2)^2 exactly
    let alpha = 0.2;
    let spec = ClassSpec::ph0_alpha(alpha).unwrap();
    let pars = params(1, 5, 1.0, 0.0);
    let a = 2.0 * (1.0 - alpha);
    for r in [0.2f64, 0.45, 0.7] {
        let exact = phi(&spec, &pars, Convention::ExactA1, r).unwrap();
        let literal = phi(&spec, &pars, Convention::PaperLiteral, r).unwrap();
        let expected = (a * a * 1.25 - (1.0 + a * a / 4.0)) * r.powi(5) / (1.0 - r);
        assert!(
            (literal - exact - expected).abs() < 1e-12,
            "r = {r}: {}",
            literal - exact
        );
    }

    // first class, N = 1: the literal linear sum opens with 2(1-a) r
    // instead of the exact r
    let pars = params(1, 1, 0.0, 0.0);
    for r in [0.1f64, 0.5] {
        let exact = phi(&spec, &pars, Convention::ExactA1, r).unwrap();
        let literal = phi(&spec, &pars, Convention::PaperLiteral, r).unwrap();
        assert!((literal - exact - (a - 1.0) * r).abs() < 1e-12);
    }

    // third class, t = 0 with lambda: the literal squared sum opens with
    // 4r^2 instead of the exact r^2
    let spec = ClassSpec::wh0_alpha(0.6).unwrap();
    let pars = params(1, 2, 0.0, 1.0);
    for r in [0.2f64, 0.5] {
        let exact = phi(&spec, &pars, Convention::ExactA1, r).unwrap();
        let literal = phi(&spec, &pars, Convention::PaperLiteral, r).unwrap();
        assert!((literal - exact - 3.0 * r * r / (1.0 - r)).abs() < 1e-12);
    }
}

#[test]
fn literal_convention_matches_exact_when_no_first_terms_enter() {
    // For N >= 2 and t = 0 with lambda = 0 the n = 1 terms never enter,
    // so the conventions must agree bit-for-bit on evaluation.
    let spec = ClassSpec::ph0_alpha(0.3).unwrap();
    let pars = params(2, 2, 1.0, 0.0);
    let exact = Majorant::new(spec, pars, Convention::ExactA1).unwrap();
    let literal = Majorant::new(spec, pars, Convention::PaperLiteral).unwrap();
    for k in 1..=9 {
        let r = k as f64 / 10.0;
        assert_eq!(exact.eval(r).unwrap(), literal.eval(r).unwrap());
    }
}
