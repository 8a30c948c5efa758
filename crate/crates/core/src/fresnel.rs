//! Truncated modified trapezium rule approximations `F_N`, `C_N`, `S_N`.
//!
//! With `F(x) = e^{-iπ/4}/√π ∫_x^∞ e^{it²} dt`, the approximation is
//!
//! ```text
//! F_N(x) = 1/(exp(2 A_N x e^{-iπ/4}) + 1)
//!        + (x/A_N) e^{i(x² + π/4)} Σ_{k=1..N} e^{-t_k²} / (x² + i t_k²)
//! ```
//!
//! and `C_N`, `S_N` follow by taking real and imaginary parts of
//! `(1 + i)(1/2 - F_N(√(π/2) x))`. Sums run from `k = N` down to `k = 1`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{require_finite, FresnelError, Result};
use crate::rule::{node, NodeData, QuadratureRule};

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;

/// `e^{iπ/4}`.
pub(crate) const ROOT_I: Complex64 = Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);

/// Arguments with `|t|` at or beyond this saturate `(sinh t ± sin t)/(cosh t + cos t)` to `sign(t)`.
pub const EDGE_SATURATION: f64 = 39.0;

/// Below this `|t|`, `sinh t - sin t` is taken from its Taylor series.
pub const EDGE_TAYLOR: f64 = 1.0;

/// Minimum admissible distance from a pole of `F_N` in the complex plane.
pub const POLE_RADIUS: f64 = 1e-8;

/// A pair `(C, S)` of Fresnel cosine and sine integral values.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FresnelPair {
    pub c: f64,
    pub s: f64,
}

impl FresnelPair {
    pub fn new(c: f64, s: f64) -> Self {
        FresnelPair { c, s }
    }
}

impl std::ops::Neg for FresnelPair {
    type Output = FresnelPair;
    fn neg(self) -> FresnelPair {
        FresnelPair::new(-self.c, -self.s)
    }
}

/// `e^{iφ}`.
///
/// Every real-axis evaluation in this crate, approximations and oracles
/// alike, takes its factor `e^{ix²}` from this function applied to `x * x`.
#[inline]
pub fn cis(phase: f64) -> Complex64 {
    let (s, c) = phase.sin_cos();
    Complex64::new(c, s)
}

/// The phase `(π/2) x²` used by the C/S evaluators.
#[inline]
pub fn half_pi_x_sq(x: f64) -> f64 {
    FRAC_PI_2 * x * x
}

/// `1/(exp(2 A x e^{-iπ/4}) + 1)` for `x ≥ 0`, as `e/(e + 1)` with a decaying exponential.
fn pole_correction(x: f64, cutoff: f64) -> Complex64 {
    debug_assert!(x >= 0.0);
    let s = SQRT_2 * cutoff * x;
    if s > 745.5 {
        return Complex64::new(0.0, 0.0);
    }
    let ez = Complex64::new(-s, s).exp();
    ez / (ez + 1.0)
}

/// The pole-correction (boundary) term `1/(exp(2 A_N x e^{-iπ/4}) + 1)`.
///
/// Negative `x` is routed through `1 - boundary_term(-x)` so the
/// exponential never grows.
pub fn boundary_term(x: f64, rule: &QuadratureRule) -> Complex64 {
    if x < 0.0 {
        Complex64::new(1.0, 0.0) - pole_correction(-x, rule.cutoff())
    } else {
        pole_correction(x, rule.cutoff())
    }
}

/// `x · scale · e^{i(x² + π/4)} Σ e^{-t²}/(x² + i t²)` over `terms`, accumulated in reverse.
fn trapezium_kernel<'a, I>(x: f64, scale: f64, terms: I) -> Complex64
where
    I: DoubleEndedIterator<Item = &'a NodeData>,
{
    let x2 = x * x;
    if !x2.is_finite() {
        // |F| < 1e-154 here; the phase of e^{ix²} is not representable anyway.
        return Complex64::new(0.0, 0.0);
    }
    let x4 = x2 * x2;
    let (mut p, mut q) = (0.0, 0.0);
    for d in terms.rev() {
        let w = d.et2 / (x4 + d.t4);
        p += w;
        q += d.t2 * w;
    }
    let sum = Complex64::new(x2 * p, -q);
    (x * scale) * ROOT_I * cis(x2) * sum
}

fn fresnel_f_nonneg(x: f64, rule: &QuadratureRule) -> Complex64 {
    let scale = rule.h() / PI;
    pole_correction(x, rule.cutoff()) + trapezium_kernel(x, scale, rule.data().iter())
}

/// `F_N(x)` on the real line.
///
/// Satisfies `F_N(-x) = 1 - F_N(x)` exactly, and `F_N(0) = 1/2`.
pub fn fresnel_f(x: f64, rule: &QuadratureRule) -> Result<Complex64> {
    require_finite(x)?;
    Ok(if x < 0.0 {
        Complex64::new(1.0, 0.0) - fresnel_f_nonneg(-x, rule)
    } else {
        fresnel_f_nonneg(x, rule)
    })
}

/// The plain truncated trapezium rule
/// `(xh/π) e^{i(x² + π/4)} Σ_{k=1..K} e^{-τ_k²}/(x² + iτ_k²)`, `τ_k = (k - 1/2)h`.
///
/// Accurate for large `x`, but tends to 0 rather than 1/2 as `x → 0⁺`.
pub fn plain_trapezium_f(x: f64, h: f64, terms: usize) -> Result<Complex64> {
    check_trapezium_args(x, h, terms)?;
    let data: Vec<NodeData> = (1..=terms).map(|k| NodeData::at(node(k, h))).collect();
    Ok(trapezium_kernel(x, h / PI, data.iter()))
}

/// Hunter–Regan modified rule: the plain rule plus the correction
/// `R(h, x)`, which is the full pole correction for `x < √2π/h`, half of
/// it at `x = √2π/h`, and zero beyond.
pub fn hunter_regan_f(x: f64, h: f64, terms: usize) -> Result<Complex64> {
    let plain = plain_trapezium_f(x, h, terms)?;
    let cutoff = PI / h;
    let edge = SQRT_2 * PI / h;
    let correction = if x < edge {
        pole_correction(x, cutoff)
    } else if x == edge {
        0.5 * pole_correction(x, cutoff)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(plain + correction)
}

fn check_trapezium_args(x: f64, h: f64, terms: usize) -> Result<()> {
    require_finite(x)?;
    if x <= 0.0 {
        return Err(FresnelError::InvalidInput(format!("x must be positive, got {x}")));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(FresnelError::InvalidParameter(format!(
            "step h must be positive, got {h}"
        )));
    }
    if terms == 0 {
        return Err(FresnelError::InvalidParameter("term count must be positive".into()));
    }
    Ok(())
}

/// `F_N(z)` continued into the complex plane.
///
/// `F_N` is meromorphic with simple poles at `±e^{-iπ/4} t_k` for `k > N`;
/// points within [`POLE_RADIUS`] of one are rejected. The poles of the
/// boundary term at `k ≤ N` cancel against the sum and are removable; near
/// those the value is recovered as the mean over a surrounding circle.
pub fn fresnel_f_complex(z: Complex64, rule: &QuadratureRule) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(FresnelError::InvalidInput(format!("non-finite z = {z}")));
    }
    if z.im == 0.0 {
        return fresnel_f(z.re, rule);
    }
    let h = rule.h();
    let n = rule.n();
    // Rotating by e^{iπ/4} puts every (removable or genuine) singularity on the real axis at ±τ_k.
    let u = z * ROOT_I;
    let k_near = ((u.re.abs() / h) + 0.5).round().max(1.0) as usize;
    let mut nearest_removable = f64::INFINITY;
    for k in k_near.saturating_sub(1).max(1)..=k_near + 1 {
        let tau = node(k, h);
        let d = Complex64::new(u.re.abs() - tau, u.im).norm();
        if k > n {
            if d < POLE_RADIUS {
                let pole = Complex64::new(tau.copysign(u.re), 0.0) * ROOT_I.conj();
                return Err(FresnelError::NearPole { z, pole, distance: d });
            }
        } else {
            nearest_removable = nearest_removable.min(d);
        }
    }
    if nearest_removable < h / 8.0 {
        const POINTS: usize = 64;
        let r = h / 4.0;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..POINTS {
            let theta = 2.0 * PI * (j as f64 + 0.5) / POINTS as f64;
            acc += fresnel_f_complex_direct(z + Complex64::from_polar(r, theta), rule);
        }
        return Ok(acc / POINTS as f64);
    }
    Ok(fresnel_f_complex_direct(z, rule))
}

fn fresnel_f_complex_direct(z: Complex64, rule: &QuadratureRule) -> Complex64 {
    let a = rule.cutoff();
    let v = 2.0 * a * z * ROOT_I.conj();
    let boundary = if v.re >= 0.0 {
        let ez = (-v).exp();
        ez / (ez + 1.0)
    } else {
        1.0 / (v.exp() + 1.0)
    };
    let z2 = z * z;
    let i = Complex64::new(0.0, 1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for d in rule.data().iter().rev() {
        sum += d.et2 / (z2 + i * d.t2);
    }
    boundary + (z / a) * ROOT_I * (i * z2).exp() * sum
}

/// `((sinh t + sin t)/(cosh t + cos t), (sinh t - sin t)/(cosh t + cos t))`.
///
/// Saturates to `sign(t)` for `|t| ≥ 39`, and uses four Taylor terms of
/// `sinh t - sin t` for `|t| < 1`.
pub fn edge_ratios(t: f64) -> (f64, f64) {
    if t.abs() >= EDGE_SATURATION {
        let s = t.signum();
        return (s, s);
    }
    let sh = t.sinh();
    let sn = t.sin();
    let den = t.cosh() + t.cos();
    let diff = if t.abs() < EDGE_TAYLOR {
        let t3 = t * t * t;
        let t4 = t3 * t;
        t3 * (1.0 / 3.0 + t4 * (1.0 / 2520.0 + t4 * (1.0 / 19_958_400.0 + (0.001 / 653_837_184.0) * t4)))
    } else {
        sh - sn
    };
    ((sh + sn) / den, diff / den)
}

/// Node sums `a_N(s) = s Σ e^{-t_k²}/(s² + t_k⁴)` and `b_N(s) = Σ t_k² e^{-t_k²}/(s² + t_k⁴)`.
pub fn aux_ab(s: f64, rule: &QuadratureRule) -> (f64, f64) {
    let s2 = s * s;
    let (mut a, mut b) = (0.0, 0.0);
    for d in rule.data().iter().rev() {
        let term = d.et2 / (s2 + d.t4);
        a += term;
        b += d.t2 * term;
    }
    (a * s, b)
}

fn fresnel_cs_nonneg(x: f64, rule: &QuadratureRule) -> FresnelPair {
    let phase = half_pi_x_sq(x);
    if !phase.is_finite() {
        return FresnelPair::new(0.5, 0.5);
    }
    let (a, b) = aux_ab(phase, rule);
    let cutoff = rule.cutoff();
    let t = (SQRT_PI * cutoff) * x;
    let m = (SQRT_PI / cutoff) * x;
    let (rplus, rminus) = edge_ratios(t);
    let (sx2, cx2) = phase.sin_cos();
    FresnelPair::new(
        0.5 * rplus + m * (a * sx2 - b * cx2),
        0.5 * rminus - m * (a * cx2 + b * sx2),
    )
}

/// `(C_N(x), S_N(x))`, both odd in `x`.
pub fn fresnel_cs(x: f64, rule: &QuadratureRule) -> Result<FresnelPair> {
    require_finite(x)?;
    Ok(if x < 0.0 {
        -fresnel_cs_nonneg(-x, rule)
    } else {
        fresnel_cs_nonneg(x, rule)
    })
}

/// `(C(x), S(x))` from `F(√(π/2) x)`: `C + iS = (1 + i)(1/2 - F)`.
pub fn cs_from_f(f: Complex64) -> FresnelPair {
    let dr = 0.5 - f.re;
    let di = -f.im;
    FresnelPair::new(dr - di, dr + di)
}

/// `F(√(π/2) x)` from `(C(x), S(x))`, inverting [`cs_from_f`].
pub fn f_from_cs(cs: FresnelPair) -> Complex64 {
    Complex64::new((1.0 - cs.c - cs.s) * 0.5, (cs.c - cs.s) * 0.5)
}
