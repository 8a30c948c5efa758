//! `erfc` on the imaginary axis and the auxiliary `|G(iy)|`, where
//! `G(z) = (1 + √π z) e^{z²} erfc(z)`.

use num_complex::Complex64;

use crate::error::{FresnelError, Result};
use crate::fresnel::SQRT_PI;

/// Largest `|y|` accepted, keeping `e^{y²}`-sized partial sums well inside range.
pub const IMAG_AXIS_LIMIT: f64 = 6.5;

fn check_y(y: f64) -> Result<()> {
    if !(y.abs() <= IMAG_AXIS_LIMIT) {
        return Err(FresnelError::Domain(format!(
            "|y| = {} outside [0, {IMAG_AXIS_LIMIT}]",
            y.abs()
        )));
    }
    Ok(())
}

/// `∫_0^y e^{t²} dt = Σ y^{2n+1} / (n! (2n+1))`, for `0 ≤ y ≤ 6.5`.
pub fn dawson_like(y: f64) -> Result<f64> {
    if y < 0.0 {
        return Err(FresnelError::Domain(format!("y must be non-negative, got {y}")));
    }
    check_y(y)?;
    let y2 = y * y;
    let mut power = y; // y^{2n+1}/n!
    let mut sum = y;
    let mut n = 0usize;
    loop {
        n += 1;
        power *= y2 / n as f64;
        let term = power / (2 * n + 1) as f64;
        sum += term;
        if n as f64 > y2 && term <= 1e-18 * sum {
            return Ok(sum);
        }
    }
}

/// `erfc(iy) = 1 - (2i/√π) ∫_0^y e^{t²} dt`; negative `y` by conjugation.
pub fn erfc_imag_axis(y: f64) -> Result<Complex64> {
    check_y(y)?;
    let v = Complex64::new(1.0, -2.0 / SQRT_PI * dawson_like(y.abs())?);
    Ok(if y < 0.0 { v.conj() } else { v })
}

/// `|G(iy)| = sqrt((1 + πy²) e^{-2y²} (1 + (4/π) (∫_0^y e^{t²} dt)²))`.
pub fn g_magnitude(y: f64) -> Result<f64> {
    let d = dawson_like(y)?;
    let pi = std::f64::consts::PI;
    Ok(((1.0 + pi * y * y) * (-2.0 * y * y).exp() * (1.0 + 4.0 / pi * d * d)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn dawson_like_values() {
        assert_eq!(dawson_like(0.0).unwrap(), 0.0);
        // partial sums 1 + 1/3 + 1/10 + 1/42 + 1/216 + 1/1320 + ...
        let mut brute = 0.0;
        let mut fact = 1.0;
        for n in 0..40 {
            if n > 0 {
                fact *= n as f64;
            }
            brute += 1.0 / (fact * (2 * n + 1) as f64);
        }
        let d = dawson_like(1.0).unwrap();
        assert!((d - brute).abs() < 1e-15);
        assert!((d - 1.462_65).abs() < 1e-5);
        assert!(dawson_like(6.6).is_err());
        assert!(dawson_like(-0.1).is_err());
        assert!(dawson_like(6.5).unwrap().is_finite());
    }

    #[test]
    fn erfc_on_axis() {
        assert_eq!(erfc_imag_axis(0.0).unwrap(), Complex64::new(1.0, 0.0));
        let v = erfc_imag_axis(1.0).unwrap();
        assert_eq!(v.re, 1.0);
        assert!((v.im + 1.650_43).abs() < 1e-5);
        for y in [0.3, 1.0, 2.5, 6.0] {
            assert_eq!(erfc_imag_axis(-y).unwrap(), erfc_imag_axis(y).unwrap().conj());
        }
        assert!(erfc_imag_axis(-7.0).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(g_magnitude(0.0).unwrap(), 1.0);
        let g1 = g_magnitude(1.0).unwrap();
        assert!((g1 - 1.4448).abs() < 1e-3, "{g1}");
        assert!(g1 * g1 > (5.0 + PI) / 1f64.exp().powi(2));
    }
}
