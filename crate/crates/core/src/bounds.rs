//! Explicit error bounds for `F_N`, `C_N` and `S_N`, plus the lower and
//! upper bounds on `|erfc|` in the right half-plane.
//!
//! Every bound is written as a direct evaluation of a closed-form
//! expression in `N` (through `A_N = sqrt((N + 1/2)π)`) and `x`, so
//! tests can compare measured errors against them point by point.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{FresnelError, Result};
use crate::fresnel::SQRT_PI;

/// `β = 1 - √2/2 - (2√2 + 1)/16 ≈ 0.0536`.
pub const BETA: f64 = 1.0 - SQRT_2 / 2.0 - (2.0 * SQRT_2 + 1.0) / 16.0;

const E_HALF_PI: f64 = 4.810_477_380_965_351; // e^{π/2}
const PI_3_2: f64 = 5.568_327_996_831_708; // π^{3/2}

fn cutoff(n: usize) -> f64 {
    ((n as f64 + 0.5) * PI).sqrt()
}

/// Which branch of the piecewise bound `Δ_h` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `x/√2 ≤ (3/4) A_N`
    Inner,
    /// `(3/4) A_N < x/√2 < (5/4) A_N`
    Transition,
    /// `x/√2 ≥ (5/4) A_N`
    Outer,
}

impl Region {
    pub fn of(x: f64, n: usize) -> Region {
        let a = cutoff(n);
        let scaled = x.abs() / SQRT_2;
        if scaled <= 0.75 * a {
            Region::Inner
        } else if scaled < 1.25 * a {
            Region::Transition
        } else {
            Region::Outer
        }
    }
}

/// The two parts of the pointwise bound `η_N = Δ_h + tail`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundBreakdown {
    pub region: Region,
    pub delta: f64,
    pub tail: f64,
    pub eta: f64,
}

/// `c_N`, `c*_N`, `c̃_N`, `ĉ_N`: all decrease with `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub c: f64,
    pub c_star: f64,
    pub c_tilde: f64,
    pub c_hat: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformBounds {
    /// `sup |F - F_N|` on ℝ.
    pub abs: f64,
    /// `sup |F - F_N|/|F|` on `x ≥ 0`.
    pub rel_pos: f64,
    /// `sup |F - F_N|/|F|` on `x ≤ 0`.
    pub rel_neg: f64,
    /// `sup |C - C_N|` and `sup |S - S_N|` on ℝ.
    pub cs_abs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallXBounds {
    /// Bound on `|F - F_N|` for `|x| ≤ A_N/√2`.
    pub f: f64,
    /// Bound on `|C - C_N|`, `|S - S_N|`; present for `|x| ≤ sqrt(N + 1/2)`.
    pub cs: Option<f64>,
    /// Sharper bound on `|S - S_N|`; present for `|x| < 1` and `N ≥ 4`.
    pub s_strong: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErfcBounds {
    pub lower: f64,
    pub lower_loose: f64,
    pub upper: f64,
}

/// `Δ_h(|x|)` with `h = sqrt(π/(N + 1/2))`; the tail field is zero.
pub fn delta_bound(x: f64, n: usize) -> BoundBreakdown {
    let x = x.abs();
    let a = cutoff(n);
    let a2 = a * a;
    let ea2 = (-a2).exp();
    let damp = -(-2.0 * a2).exp_m1(); // 1 - e^{-2A²}
    let region = Region::of(x, n);
    let delta = match region {
        Region::Inner => x * ea2 / (SQRT_PI * (a2 - 0.5 * x * x) * damp),
        Region::Transition => {
            4.0 * x * ea2 * (1.0 + 2.0 * SQRT_PI * (-BETA * a2).exp()) / (SQRT_PI * a * (a + x / SQRT_2) * damp)
        }
        Region::Outer => {
            let far = x * ea2 / (SQRT_PI * (0.5 * x * x - a2) * damp);
            far + 1.0 / (SQRT_2 * a * x).exp_m1()
        }
    };
    BoundBreakdown {
        region,
        delta,
        tail: 0.0,
        eta: delta,
    }
}

/// Bound on the truncation error of discarding nodes `k > N`:
/// `(2π + 1)|x| / (2π A_N sqrt(x⁴ + A_N⁴)) · e^{-A_N²}`.
pub fn tail_bound(x: f64, n: usize) -> f64 {
    let x = x.abs();
    let a = cutoff(n);
    let a2 = a * a;
    let root = (x * x).hypot(a2);
    (2.0 * PI + 1.0) * x / (2.0 * PI * a * root) * (-a2).exp()
}

/// Pointwise bound `η_N(x) ≥ |F(x) - F_N(x)|`, even in `x`.
pub fn eta(x: f64, n: usize) -> BoundBreakdown {
    let d = delta_bound(x, n);
    let tail = tail_bound(x, n);
    BoundBreakdown {
        tail,
        eta: d.delta + tail,
        ..d
    }
}

pub fn constants(n: usize) -> BoundConstants {
    let a = cutoff(n);
    let a2 = a * a;
    let damp = -(-2.0 * a2).exp_m1();
    let growth = 1.0 + 2.0 * SQRT_PI * (-BETA * a2).exp();
    let two_pi_1 = 2.0 * PI + 1.0;

    let c = 20.0 * SQRT_2 / (E_HALF_PI * 9.0 * PI * damp) * growth + two_pi_1 / (E_HALF_PI * 2.0 * SQRT_2 * PI_3_2 * a);
    let c_star = 10.0 * SQRT_2 * (4.0 + 5.0 * (2.0 * PI).sqrt() * a) * growth / (9.0 * SQRT_PI * E_HALF_PI * a * damp)
        + two_pi_1 / (PI * E_HALF_PI * a) * (1.0 / (SQRT_2 * a) + SQRT_PI);
    let c_tilde = 8.0 / (3.0 * PI_3_2 * E_HALF_PI * damp) + two_pi_1 / (PI * PI * E_HALF_PI * a);
    let c_hat = c + SQRT_2 * two_pi_1 / (PI_3_2 * E_HALF_PI * (n as f64 + 0.5).sqrt());
    BoundConstants {
        c,
        c_star,
        c_tilde,
        c_hat,
    }
}

pub fn uniform_bounds(n: usize) -> UniformBounds {
    let k = constants(n);
    let decay = (-PI * n as f64).exp();
    let half = n as f64 + 0.5;
    UniformBounds {
        abs: k.c * decay / half.sqrt(),
        rel_pos: k.c_star * decay,
        rel_neg: 2.0 * k.c * decay / half.sqrt(),
        cs_abs: 2.0 * k.c * decay / (2.0 * half).sqrt(),
    }
}

/// Relative error bound: `2(1 + √π x) η_N(x)` for `x ≥ 0`, `2 η_N(x)` for `x < 0`.
pub fn pointwise_rel_bound(x: f64, n: usize) -> f64 {
    let e = eta(x, n).eta;
    if x >= 0.0 {
        2.0 * (1.0 + SQRT_PI * x) * e
    } else {
        2.0 * e
    }
}

/// Bounds that vanish linearly (or cubically, for `S`) at the origin.
pub fn small_x_bounds(x: f64, n: usize) -> Result<SmallXBounds> {
    let ax = x.abs();
    let a = cutoff(n);
    if !(ax <= a / SQRT_2) {
        return Err(FresnelError::InvalidInput(format!(
            "small-x bound needs |x| ≤ A_N/√2 = {}, got {x}",
            a / SQRT_2
        )));
    }
    let k = constants(n);
    let decay = (-PI * n as f64).exp();
    let half = n as f64 + 0.5;
    let f = k.c_tilde * ax * decay / (2.0 * n as f64 + 1.0);
    let cs = (ax <= half.sqrt()).then_some(SQRT_PI * f);
    let s_strong = (ax < 1.0 && n >= 4).then(|| {
        let x3 = ax * ax * ax;
        x3 / (1.0 - x3 * ax) * SQRT_2 * k.c_hat * (-PI * (n as f64 - 0.25)).exp() / half.sqrt()
    });
    Ok(SmallXBounds { f, cs, s_strong })
}

/// Hunter–Regan bound for the modified rule with arbitrary step `h`.
/// Singular at `x = √2π/h`.
pub fn hr_bound(x: f64, h: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(FresnelError::InvalidInput(format!("x must be positive, got {x}")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(FresnelError::InvalidParameter(format!(
            "step h must be positive, got {h}"
        )));
    }
    if x == SQRT_2 * PI / h {
        return Err(FresnelError::Singular(x));
    }
    let p = PI * PI / (h * h);
    Ok(x * (-p).exp() / (SQRT_PI * -(-2.0 * p).exp_m1() * (0.5 * x * x - p).abs()))
}

/// `|F(x)| ≥ 1/(2 + 2√π x)` for `x ≥ 0` and `≥ 1/2` for `x ≤ 0`.
pub fn f_lower_bound(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (2.0 + 2.0 * SQRT_PI * x)
    } else {
        0.5
    }
}

/// Bounds on `|erfc(z)|` for `Re z ≥ 0`.
pub fn erfc_bounds(z: Complex64) -> Result<ErfcBounds> {
    if !(z.re >= 0.0) || !z.im.is_finite() {
        return Err(FresnelError::Domain(format!("erfc bounds need Re z ≥ 0, got {z}")));
    }
    let (x, y) = (z.re, z.im);
    let upper = (y * y - x * x).exp();
    let lower = upper / ((1.0 + SQRT_PI * x).powi(2) + PI * y * y).sqrt();
    let lower_loose = upper / (1.0 + SQRT_PI * z.norm());
    Ok(ErfcBounds {
        lower,
        lower_loose,
        upper,
    })
}

/// Bound on `|F(z) - F_N(z)|` off the real axis. Quadrants 1 and 3 (and
/// the axes) carry the real-line bound; in quadrants 2 and 4 it grows by
/// `e^{-xy}` and needs `|Im z| ≤ A_N/(2√2)`.
pub fn strip_bound(z: Complex64, n: usize) -> Result<f64> {
    let (x, y) = (z.re, z.im);
    if x * y >= 0.0 {
        return Ok(uniform_bounds(n).abs);
    }
    let limit = cutoff(n) / (2.0 * SQRT_2);
    if y.abs() > limit {
        return Err(FresnelError::Domain(format!(
            "|Im z| = {} exceeds A_N/(2√2) = {limit} in quadrant 2/4",
            y.abs()
        )));
    }
    Ok(constants(n).c_hat * (-x * y).exp() * (-PI * n as f64).exp() / (n as f64 + 0.5).sqrt())
}

/// Bound on `|a_n - b_n|`, the difference of the `n`-th Maclaurin
/// coefficients of `F` and `F_N`. Needs `N ≥ 4`.
pub fn maclaurin_coeff_bound(order: u32, n: usize) -> Result<f64> {
    if n < 4 {
        return Err(FresnelError::Domain(format!(
            "Maclaurin coefficient bound needs N ≥ 4, got {n}"
        )));
    }
    Ok(
        constants(n).c_hat * (2.0 / PI).powf(order as f64 / 2.0) * (-PI * (n as f64 - 0.25)).exp()
            / (n as f64 + 0.5).sqrt(),
    )
}

/// The same bound for the coefficients of `C_N` and `S_N` (an extra factor `√2`).
pub fn maclaurin_coeff_bound_cs(order: u32, n: usize) -> Result<f64> {
    maclaurin_coeff_bound(order, n).map(|b| SQRT_2 * b)
}
