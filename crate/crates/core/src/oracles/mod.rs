//! Independent reference evaluations used to validate the approximations:
//! adaptive quadrature of integral representations, the Maclaurin series,
//! Weideman's rational expansion of `w(z)`, and imaginary-axis `erfc`.

mod appendix;
mod quadrature;
mod series;
mod weideman;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{require_finite, FresnelError, Result};
use crate::fresnel::{cis, f_from_cs, half_pi_x_sq, FresnelPair, ROOT_I};

pub use appendix::{dawson_like, erfc_imag_axis, g_magnitude, IMAG_AXIS_LIMIT};
pub use quadrature::{integrate, QuadEstimate, QuadSettings};
pub use series::{cs_power_series, series_coefficients, SERIES_ACCURATE_LIMIT};
pub use weideman::{
    make_weideman, self_check_error, self_check_tolerance, weideman_f, weideman_w, WeidemanModel, MAX_DEGREE,
    MIN_DEGREE, SELF_CHECK_POINTS,
};

/// Below this `|x|` the quadrature oracle for `F` switches to the power series.
pub const SERIES_SWITCH_F: f64 = 0.1;

/// At or below this `|x|` the `C`/`S` oracles use the power series.
pub const SERIES_SWITCH_CS: f64 = 1.5;

/// Number of series terms used by the oracles.
pub const ORACLE_SERIES_TERMS: usize = 30;

const SQRT_HALF_PI: f64 = 1.253_314_137_315_500_3;

/// `1/(√2 π)` split into a leading double and its remainder.
const INV_SQRT2_PI: (f64, f64) = (0.225_079_079_039_276_51, 3.448_306_879_087_735_7e-18);

/// `a·b` as an unevaluated sum `hi + lo`.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// `a·b + c·d` with a single final rounding (up to a tiny remainder).
fn dot2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let (p1, e1) = two_prod(a, b);
    let (p2, e2) = two_prod(c, d);
    let s = p1 + p2;
    let z = s - p1;
    let err = (p1 - (s - z)) + (p2 - z);
    s + (err + e1 + e2)
}

/// `u·v` for complex `u`, `v`, each part rounded once.
fn mul_accurate(u: Complex64, v: Complex64) -> Complex64 {
    Complex64::new(dot2(u.re, v.re, -u.im, v.im), dot2(u.re, v.im, u.im, v.re))
}

/// `F(x) e^{-ix²}` for `x > 0`, from
/// `(x/(√2 π)) ∫_0^T e^{-t²} ((x² + t²) + i(x² - t²))/(x⁴ + t⁴) dt`.
pub fn quad_envelope(x: f64, settings: &QuadSettings) -> Result<Complex64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(FresnelError::InvalidInput(format!(
            "envelope needs finite x > 0, got {x}"
        )));
    }
    let x2 = x * x;
    let x4 = x2 * x2;
    let est = integrate(
        |t| {
            let t2 = t * t;
            let w = (-t2).exp() / (x4 + t2 * t2);
            Complex64::new((x2 + t2) * w, (x2 - t2) * w)
        },
        0.0,
        settings.truncation,
        &[x],
        settings,
    )?;
    let (hi, lo) = two_prod(x, INV_SQRT2_PI.0);
    let lo = lo + x * INV_SQRT2_PI.1;
    let v = est.value;
    Ok(Complex64::new(hi.mul_add(v.re, lo * v.re), hi.mul_add(v.im, lo * v.im)))
}

/// `F(x)` by quadrature for `|x| ≥ 0.1` and by the power series below.
pub fn quad_f(x: f64, settings: &QuadSettings) -> Result<Complex64> {
    require_finite(x)?;
    if x < 0.0 {
        return Ok(1.0 - quad_f(-x, settings)?);
    }
    if x == 0.0 {
        return Ok(Complex64::new(0.5, 0.0));
    }
    if x < SERIES_SWITCH_F {
        let cs = cs_power_series(x / SQRT_HALF_PI, ORACLE_SERIES_TERMS)?;
        return Ok(f_from_cs(cs));
    }
    Ok(mul_accurate(cis(x * x), quad_envelope(x, settings)?))
}

/// `(C(x), S(x))` from an envelope `x' ↦ F(x') e^{-ix'²}` at `x' = √(π/2) x`,
/// with the power series for `|x| ≤ 1.5`.
fn cs_via_envelope<E>(x: f64, envelope: E) -> Result<FresnelPair>
where
    E: Fn(f64) -> Result<Complex64>,
{
    require_finite(x)?;
    if x < 0.0 {
        return Ok(-cs_via_envelope(-x, envelope)?);
    }
    if x <= SERIES_SWITCH_CS {
        return cs_power_series(x, ORACLE_SERIES_TERMS);
    }
    let phase = half_pi_x_sq(x);
    if !phase.is_finite() {
        return Ok(FresnelPair::new(0.5, 0.5));
    }
    let g = mul_accurate(cis(phase), envelope(SQRT_HALF_PI * x)?);
    // C + iS = (1 + i)(1/2 - F)
    Ok(FresnelPair::new(0.5 - g.re + g.im, 0.5 - g.re - g.im))
}

/// `(C(x), S(x))` from the quadrature envelope.
pub fn quad_cs(x: f64, settings: &QuadSettings) -> Result<FresnelPair> {
    cs_via_envelope(x, |xp| quad_envelope(xp, settings))
}

/// `(C(x), S(x))` from the degree-`m` Weideman model.
pub fn weideman_cs(x: f64, m: usize) -> Result<FresnelPair> {
    let model = make_weideman(m)?;
    cs_via_envelope(x, |xp| model.envelope(xp))
}

/// `w(z) = (2iz/π) ∫_0^T e^{-t²}/(z² - t²) dt` for `Im z > 0`.
pub fn quad_w(z: Complex64, settings: &QuadSettings) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(FresnelError::InvalidInput(format!("non-finite argument {z}")));
    }
    if !(z.im > 0.0) {
        return Err(FresnelError::Domain(format!("Im z = {} must be positive", z.im)));
    }
    let z2 = z * z;
    let est = integrate(
        |t| (-t * t).exp() / (z2 - t * t),
        0.0,
        settings.truncation,
        &[z.re.abs()],
        settings,
    )?;
    Ok(Complex64::new(0.0, 2.0 / PI) * z * est.value)
}

/// `F(z) = e^{iz²} w(e^{iπ/4} z)/2` by quadrature, for `arg z` in `(-π/4, 3π/4)`.
pub fn quad_f_complex(z: Complex64, settings: &QuadSettings) -> Result<Complex64> {
    let u = z * ROOT_I;
    Ok(0.5 * (Complex64::i() * z * z).exp() * quad_w(u, settings)?)
}

/// `∫_x^∞ e^{-t²} dt` for `x ≥ 0`, truncated at `x + T`.
pub fn gaussian_tail(x: f64, settings: &QuadSettings) -> Result<f64> {
    require_finite(x)?;
    if x < 0.0 {
        return Err(FresnelError::Domain(format!("gaussian_tail needs x ≥ 0, got {x}")));
    }
    let est = integrate(
        |t| Complex64::new((-t * t).exp(), 0.0),
        x,
        x + settings.truncation,
        &[],
        settings,
    )?;
    Ok(est.value.re)
}
