use std::f64::consts::{FRAC_1_SQRT_2, PI};

use fresnel_core::bounds::erfc_bounds;
use fresnel_core::oracles::{
    cs_power_series, dawson_like, erfc_imag_axis, g_magnitude, gaussian_tail, make_weideman, quad_f, quad_w,
    series_coefficients, weideman_w, QuadSettings,
};
use fresnel_core::{cis, f_from_cs};
use num_complex::Complex64;

fn grid(a: f64, b: f64, points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| a + (b - a) * i as f64 / (points - 1) as f64)
}

fn max_rel_vs_quad(m: usize, a: f64, b: f64, points: usize) -> f64 {
    let s = QuadSettings::default();
    let model = make_weideman(m).unwrap();
    grid(a, b, points)
        .map(|x| {
            let q = quad_f(x, &s).unwrap();
            (model.fresnel_f(x).unwrap() - q).norm() / q.norm()
        })
        .fold(0.0, f64::max)
}

#[test]
fn quadrature_and_weideman_agree() {
    let s = QuadSettings::default();
    let model = make_weideman(50).unwrap();
    for x in grid(0.1, 100.0, 2000) {
        let q = quad_f(x, &s).unwrap();
        let w = model.fresnel_f(x).unwrap();
        assert!((q - w).norm() <= 2e-15 * q.norm().max(1.0), "x = {x}");
    }
    let q = quad_f(10.0, &s).unwrap();
    assert!((q - model.fresnel_f(10.0).unwrap()).norm() <= 1e-15 * q.norm());
}

#[test]
fn series_and_quadrature_agree() {
    let s = QuadSettings::default();
    let scale = (PI / 2.0).sqrt();
    for x in grid(0.1, 1.5, 200) {
        let via_series = f_from_cs(cs_power_series(x, 30).unwrap());
        let q = quad_f(scale * x, &s).unwrap();
        assert!((via_series - q).norm() <= 1e-15, "x = {x}");
    }
}

#[test]
fn series_terms_decrease() {
    let (c, s) = series_coefficients(30);
    for x in grid(0.05, 1.5, 100) {
        let u = x.powi(4);
        let mags = |coeffs: &[f64]| {
            coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| (a * u.powi(n as i32)).abs())
                .collect::<Vec<_>>()
        };
        for m in [mags(&c), mags(&s)] {
            assert!(m[2..].windows(2).all(|w| w[1] < w[0]), "x = {x}");
        }
    }
}

#[test]
fn fourteen_terms_at_one_and_a_half() {
    let short = cs_power_series(1.5, 14).unwrap();
    let full = cs_power_series(1.5, 30).unwrap();
    assert!((short.c - full.c).abs() <= 2e-16);
    assert!((short.s - full.s).abs() <= 2.3e-17);
}

#[test]
fn series_reference_values() {
    let v = cs_power_series(1.0, 15).unwrap();
    assert!((v.c - 0.779_893_400_4).abs() < 1e-10 && (v.s - 0.438_259_147_4).abs() < 1e-10);
}

#[test]
fn weideman_thirty_six_reaches_full_precision() {
    let e = max_rel_vs_quad(36, 0.1, 1000.0, 4000);
    assert!(e <= 1e-15, "{e:e}");
    let model = make_weideman(36).unwrap();
    assert!((model.fresnel_f(0.0).unwrap() - 0.5).norm() <= 1e-15);
}

#[test]
fn weideman_eighteen_reaches_1e_8() {
    let e = max_rel_vs_quad(18, 0.1, 1000.0, 4000);
    assert!(e <= 1e-8, "{e:e}");
}

#[test]
fn weideman_converges_along_diagonal() {
    let diff = |m: usize| {
        grid(0.0, 50.0, 500)
            .map(|r| {
                let z = Complex64::new(FRAC_1_SQRT_2 * r, FRAC_1_SQRT_2 * r);
                (weideman_w(z, m).unwrap() - weideman_w(z, 64).unwrap()).norm()
            })
            .fold(0.0, f64::max)
    };
    let d16 = diff(16);
    assert!(d16 > 1e-9 && d16 < 1e-5, "{d16:e}");
    let d32 = diff(32);
    assert!(d32 < d16 * 1e-3, "{d32:e}");
}

#[test]
fn weideman_at_one_on_diagonal() {
    let model = make_weideman(36).unwrap();
    let z = Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    let f = cis(1.0) * model.w(z).unwrap() / 2.0;
    let q = quad_f(1.0, &QuadSettings::default()).unwrap();
    assert!((f - q).norm() <= 1e-15 * q.norm());
}

#[test]
fn w_on_imaginary_axis_within_erfc_bounds() {
    // w(i) = e·erfc(1)
    let v = weideman_w(Complex64::new(0.0, 1.0), 50).unwrap();
    assert!(v.im.abs() < 1e-15);
    let erfc1 = v.re / 1f64.exp();
    let b = erfc_bounds(Complex64::new(1.0, 0.0)).unwrap();
    assert!(b.lower <= erfc1 && erfc1 <= b.upper);
    let q = quad_w(Complex64::new(0.0, 1.0), &QuadSettings::default()).unwrap();
    assert!((q - v).norm() < 1e-15);
}

#[test]
fn gaussian_tail_inequality() {
    let s = QuadSettings::default();
    for x in [0.1, 0.5, 1.0, 2.0, 5.0] {
        assert!(2.0 * gaussian_tail(x, &s).unwrap() < (-x * x).exp() / x, "x = {x}");
    }
}

#[test]
fn imaginary_axis_chain() {
    let s = QuadSettings::default();
    for y in grid(0.0, 6.0, 500) {
        assert!(g_magnitude(y).unwrap() >= 1.0, "y = {y}");
        let e = erfc_imag_axis(y).unwrap();
        assert!((-y * y).exp() * e.norm() <= 1.0 + 1e-15, "y = {y}");
        let b = erfc_bounds(Complex64::new(0.0, y)).unwrap();
        assert!(
            b.lower <= e.norm() * (1.0 + 1e-15) && e.norm() <= b.upper * (1.0 + 1e-15),
            "y = {y}"
        );
    }
    // cross-check the series against quadrature of e^{t²}
    let est = fresnel_core::oracles::integrate(|t| Complex64::new((t * t).exp(), 0.0), 0.0, 2.5, &[], &s).unwrap();
    assert!((est.value.re / dawson_like(2.5).unwrap() - 1.0).abs() < 1e-14);
}
