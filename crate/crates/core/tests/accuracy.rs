//! Approximations and bounds checked against the reference evaluations.

use std::f64::consts::{PI, SQRT_2};

use fresnel_core::bounds::{eta, hr_bound, maclaurin_coeff_bound_cs, pointwise_rel_bound, small_x_bounds, strip_bound};
use fresnel_core::oracles::{cs_power_series, quad_cs, quad_f, quad_f_complex, QuadSettings};
use fresnel_core::{cs_from_f, fresnel_cs, fresnel_f, fresnel_f_complex, hunter_regan_f, make_rule, plain_trapezium_f};
use num_complex::Complex64;

fn settings() -> QuadSettings {
    QuadSettings::default()
}

fn grid(a: f64, b: f64, points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| a + (b - a) * i as f64 / (points - 1) as f64)
}

#[test]
fn f_at_one() {
    let rule = make_rule(12).unwrap();
    let err = (fresnel_f(1.0, &rule).unwrap() - quad_f(1.0, &settings()).unwrap()).norm();
    assert!(err <= 1e-15, "{err:e}");
}

#[test]
fn cs_at_one_matches_series() {
    let rule = make_rule(12).unwrap();
    let cs = fresnel_cs(1.0, &rule).unwrap();
    let series = cs_power_series(1.0, 15).unwrap();
    assert!((cs.c - series.c).abs() <= 1e-15 && (cs.s - series.s).abs() <= 1e-15);
    assert!((cs.c - 0.779_893_400_4).abs() < 1e-10);
    assert!((cs.s - 0.438_259_147_4).abs() < 1e-10);
}

#[test]
fn cs_at_twenty() {
    let rule = make_rule(12).unwrap();
    let cs = fresnel_cs(20.0, &rule).unwrap();
    let r = quad_cs(20.0, &settings()).unwrap();
    assert!(
        (cs.c - r.c).abs() <= 4.5e-16 && (cs.s - r.s).abs() <= 4.5e-16,
        "{cs:?} {r:?}"
    );
    // Rounding (π/2)·400 to the argument of F costs about 1e-14 of phase.
    let via_f = cs_from_f(quad_f((PI / 2.0).sqrt() * 20.0, &settings()).unwrap());
    assert!((cs.c - via_f.c).abs() <= 2e-14 && (cs.s - via_f.s).abs() <= 2e-14);
}

#[test]
fn f_within_eta_for_small_n() {
    let s = settings();
    let reference: Vec<(f64, Complex64)> = grid(0.0, 50.0, 2000).map(|x| (x, quad_f(x, &s).unwrap())).collect();
    for n in 1..=8 {
        let rule = make_rule(n).unwrap();
        for &(x, f) in &reference {
            let err = (fresnel_f(x, &rule).unwrap() - f).norm();
            let bound = eta(x, n).eta;
            assert!(err <= bound, "N = {n}, x = {x}: {err:e} > {bound:e}");
        }
    }
}

#[test]
fn eta_example() {
    let err = (fresnel_f(3.0, &make_rule(6).unwrap()).unwrap() - quad_f(3.0, &settings()).unwrap()).norm();
    assert!(eta(3.0, 6).eta >= err);
}

#[test]
fn relative_bound_example() {
    let f = quad_f(2.0, &settings()).unwrap();
    let rel = (fresnel_f(2.0, &make_rule(9).unwrap()).unwrap() - f).norm() / f.norm();
    assert!(pointwise_rel_bound(2.0, 9) >= rel);
    let f = quad_f(-2.0, &settings()).unwrap();
    let rel = (fresnel_f(-2.0, &make_rule(5).unwrap()).unwrap() - f).norm() / f.norm();
    assert!(pointwise_rel_bound(-2.0, 5) >= rel);
}

#[test]
fn small_x_f_bound() {
    // The bound sinks below double rounding once N exceeds 4 at this x.
    let s = settings();
    for n in 1..=4 {
        let rule = make_rule(n).unwrap();
        for x in [1e-3, 1e-2, 0.1, 0.5] {
            let err = (fresnel_f(x, &rule).unwrap() - quad_f(x, &s).unwrap()).norm();
            let b = small_x_bounds(x, n).unwrap();
            assert!(err <= b.f, "N = {n}, x = {x}: {err:e} > {:e}", b.f);
        }
    }
}

#[test]
fn small_x_cs_bounds() {
    for n in 4..=7 {
        let rule = make_rule(n).unwrap();
        for x in [0.05, 0.1, 0.3] {
            let got = fresnel_cs(x, &rule).unwrap();
            let exact = cs_power_series(x, 30).unwrap();
            let b = small_x_bounds(x, n).unwrap();
            let strong = b.s_strong.unwrap();
            assert!((got.s - exact.s).abs() <= strong, "N = {n}, x = {x}");
            let cs = b.cs.unwrap();
            assert!((got.c - exact.c).abs() <= cs && (got.s - exact.s).abs() <= cs);
        }
    }
}

#[test]
fn leading_maclaurin_coefficient_of_c() {
    // C_N(x)/x - 1 at tiny x is the first-coefficient error, up to O(x⁴).
    let x = 1e-4;
    for n in 4..=9 {
        let c = fresnel_cs(x, &make_rule(n).unwrap()).unwrap().c;
        let bound = maclaurin_coeff_bound_cs(0, n).unwrap();
        assert!(
            (c / x - 1.0).abs() <= bound,
            "N = {n}: {:e} > {bound:e}",
            (c / x - 1.0).abs()
        );
    }
}

#[test]
fn complex_argument_first_quadrant() {
    let z = Complex64::new(1.0, 1.0);
    let exact = quad_f_complex(z, &settings()).unwrap();
    let approx = fresnel_f_complex(z, &make_rule(8).unwrap()).unwrap();
    assert!((exact - approx).norm() <= strip_bound(z, 8).unwrap());
}

#[test]
fn complex_argument_fourth_quadrant() {
    let s = settings();
    for n in [6, 8] {
        let rule = make_rule(n).unwrap();
        for z in [
            Complex64::new(1.0, -0.5),
            Complex64::new(2.0, -0.3),
            Complex64::new(1.5, -1.0),
        ] {
            let err = (quad_f_complex(z, &s).unwrap() - fresnel_f_complex(z, &rule).unwrap()).norm();
            assert!(err <= strip_bound(z, n).unwrap(), "N = {n}, z = {z}");
        }
    }
}

#[test]
fn plain_rule_fails_near_origin() {
    let rule = make_rule(12).unwrap();
    let v = plain_trapezium_f(1e-8, rule.h(), 12).unwrap();
    assert!(v.norm() < 1e-7);
    assert!((quad_f(1e-8, &settings()).unwrap() - v).norm() > 0.49);
}

#[test]
fn plain_rule_within_hunter_regan_bound() {
    // Enough terms that truncating the infinite sum is negligible.
    let f = quad_f(10.0, &settings()).unwrap();
    let v = plain_trapezium_f(10.0, 0.5, 40).unwrap();
    assert!((v - f).norm() <= hr_bound(10.0, 0.5).unwrap() + 10.0 * f64::EPSILON * f.norm());
}

#[test]
fn modified_rule_within_hunter_regan_bound() {
    let s = settings();
    let f = quad_f(1.0, &s).unwrap();
    let v = hunter_regan_f(1.0, 0.5, 200).unwrap();
    assert!((v - f).norm() <= hr_bound(1.0, 0.5).unwrap() + 10.0 * f64::EPSILON);
    // A coarser step puts the bound well above rounding.
    for x in [0.5, 1.0, 2.0, 3.0] {
        let f = quad_f(x, &s).unwrap();
        let v = hunter_regan_f(x, 1.0, 60).unwrap();
        assert!((v - f).norm() <= hr_bound(x, 1.0).unwrap(), "x = {x}");
    }
}

#[test]
fn hunter_regan_branches() {
    let h = 0.8;
    let edge = SQRT_2 * PI / h;
    let plain = plain_trapezium_f(edge, h, 30).unwrap();
    let full =
        hunter_regan_f(edge * (1.0 - 1e-12), h, 30).unwrap() - plain_trapezium_f(edge * (1.0 - 1e-12), h, 30).unwrap();
    let half = hunter_regan_f(edge, h, 30).unwrap() - plain;
    assert!((half - 0.5 * full).norm() < 1e-9 * full.norm());
    let far = 2.0 * edge;
    assert_eq!(
        hunter_regan_f(far, h, 30).unwrap(),
        plain_trapezium_f(far, h, 30).unwrap()
    );
}
