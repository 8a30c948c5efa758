//! Maclaurin series of `C` and `S`, evaluated by Horner's rule in `x⁴`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{FresnelError, Result};
use crate::fresnel::FresnelPair;

/// Beyond this `|x|` the alternating series loses significant digits.
pub const SERIES_ACCURATE_LIMIT: f64 = 2.0;

/// Coefficients `c_n`, `s_n` of `C(x) = x Σ c_n x^{4n}` and `S(x) = x³ Σ s_n x^{4n}`.
pub fn series_coefficients(terms: usize) -> (Vec<f64>, Vec<f64>) {
    let q = FRAC_PI_2 * FRAC_PI_2;
    let mut c = Vec::with_capacity(terms);
    let mut s = Vec::with_capacity(terms);
    let mut even = 1.0; // (π/2)^{2n} / (2n)!
    let mut odd = FRAC_PI_2; // (π/2)^{2n+1} / (2n+1)!
    for n in 0..terms {
        if n > 0 {
            let k = n as f64;
            even *= q / ((2.0 * k - 1.0) * (2.0 * k));
            odd *= q / ((2.0 * k) * (2.0 * k + 1.0));
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let k = n as f64;
        c.push(sign * even / (4.0 * k + 1.0));
        s.push(sign * odd / (4.0 * k + 3.0));
    }
    (c, s)
}

fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
}

/// `(C(x), S(x))` from the first `terms` terms of each series.
///
/// Accurate to rounding for `|x| ≤ 1.5` with 14 or more terms; above
/// [`SERIES_ACCURATE_LIMIT`] cancellation sets in and a warning is logged.
pub fn cs_power_series(x: f64, terms: usize) -> Result<FresnelPair> {
    if terms == 0 {
        return Err(FresnelError::InvalidParameter("series needs at least one term".into()));
    }
    if !x.is_finite() {
        return Err(FresnelError::NonFinite(x));
    }
    if x.abs() > SERIES_ACCURATE_LIMIT {
        log::warn!("power series at |x| = {} loses significance", x.abs());
    }
    let (c, s) = series_coefficients(terms);
    let x2 = x * x;
    let u = x2 * x2;
    Ok(FresnelPair::new(x * horner(&c, u), x * x2 * horner(&s, u)))
}
