//! Weideman's rational expansion of the Faddeeva function
//! `w(z) = e^{-z²} erfc(-iz)` in the upper half-plane.

use std::collections::HashMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{FresnelError, Result};
use crate::fresnel::{cis, SQRT_PI};

use super::quadrature::QuadSettings;

pub const MIN_DEGREE: usize = 4;
pub const MAX_DEGREE: usize = 128;

/// Imaginary-axis points `w(it)` is checked at when a model is built.
pub const SELF_CHECK_POINTS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];

#[derive(Debug, Clone, PartialEq)]
pub struct WeidemanModel {
    m: usize,
    l: f64,
    /// `a_0, …, a_M`; only `a_1 … a_M` enter the polynomial.
    coeffs: Vec<f64>,
}

impl WeidemanModel {
    fn build(m: usize) -> Self {
        let l = (m as f64 / SQRT_2).sqrt();
        // 4M equispaced angles θ_j = jπ/(2M); θ = ±π maps to t = ∞ where f vanishes.
        let half = 2 * m as isize;
        let f: Vec<(f64, f64)> = (1 - half..half)
            .map(|j| {
                let theta = j as f64 * PI / half as f64;
                let t = l * (0.5 * theta).tan();
                (theta, (-t * t).exp() * (l * l + t * t))
            })
            .collect();
        let coeffs = (0..=m)
            .map(|n| {
                let sum: f64 = f.iter().rev().map(|&(theta, v)| v * (n as f64 * theta).cos()).sum();
                sum / (2 * half) as f64
            })
            .collect();
        WeidemanModel { m, l, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `w(z)` for `Im z ≥ 0`.
    pub fn w(&self, z: Complex64) -> Result<Complex64> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(FresnelError::InvalidInput(format!("non-finite argument {z}")));
        }
        if z.im < 0.0 {
            return Err(FresnelError::Domain(format!("Im z = {} is negative", z.im)));
        }
        let iz = Complex64::i() * z;
        let den = self.l - iz;
        let big_z = (self.l + iz) / den;
        let p = self.coeffs[1..]
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * big_z + a);
        Ok(2.0 * p / (den * den) + 1.0 / (SQRT_PI * den))
    }

    /// `F(x) = e^{ix²} w(e^{iπ/4} x) / 2`, with `F(-x) = 1 - F(x)`.
    pub fn fresnel_f(&self, x: f64) -> Result<Complex64> {
        let x = crate::error::require_finite(x)?;
        if x < 0.0 {
            return Ok(1.0 - self.fresnel_f(-x)?);
        }
        Ok(cis(x * x) * self.envelope(x)?)
    }

    /// `F(x) e^{-ix²}` for `x ≥ 0`.
    pub fn envelope(&self, x: f64) -> Result<Complex64> {
        let z = Complex64::new(FRAC_1_SQRT_2 * x, FRAC_1_SQRT_2 * x);
        Ok(0.5 * self.w(z)?)
    }
}

/// Acceptance threshold for the construction self-check at degree `m`.
pub fn self_check_tolerance(m: usize) -> f64 {
    if m >= 36 {
        1e-13
    } else {
        (1e-13 * (0.9 * (36 - m) as f64).exp()).min(1e-3)
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<WeidemanModel>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<WeidemanModel>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (once per degree) and self-checks the degree-`m` model.
pub fn make_weideman(m: usize) -> Result<Arc<WeidemanModel>> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        return Err(FresnelError::InvalidParameter(format!(
            "degree {m} outside [{MIN_DEGREE}, {MAX_DEGREE}]"
        )));
    }
    let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(model) = map.get(&m) {
        return Ok(Arc::clone(model));
    }
    let model = WeidemanModel::build(m);
    if model.coeffs.iter().any(|a| !a.is_finite()) {
        return Err(FresnelError::SelfCheck {
            m,
            error: f64::INFINITY,
        });
    }
    let error = self_check_error(&model)?;
    if !(error <= self_check_tolerance(m)) {
        return Err(FresnelError::SelfCheck { m, error });
    }
    log::debug!("weideman model M = {m} self-check error {error:.3e}");
    let model = Arc::new(model);
    map.insert(m, Arc::clone(&model));
    Ok(model)
}

/// Largest relative error of the model against quadrature at [`SELF_CHECK_POINTS`].
pub fn self_check_error(model: &WeidemanModel) -> Result<f64> {
    let settings = QuadSettings::default();
    let mut worst: f64 = 0.0;
    for &t in &SELF_CHECK_POINTS {
        let reference = super::quad_w(Complex64::new(0.0, t), &settings)?;
        let got = model.w(Complex64::new(0.0, t))?;
        worst = worst.max((got - reference).norm() / reference.norm());
    }
    Ok(worst)
}

/// `w(z)` from the cached degree-`m` model.
pub fn weideman_w(z: Complex64, m: usize) -> Result<Complex64> {
    make_weideman(m)?.w(z)
}

/// `F(x)` from the cached degree-`m` model.
pub fn weideman_f(x: f64, m: usize) -> Result<Complex64> {
    make_weideman(m)?.fresnel_f(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_range() {
        assert!(make_weideman(3).is_err());
        assert!(make_weideman(129).is_err());
    }

    #[test]
    fn cached_instance_is_shared() {
        let a = make_weideman(40).unwrap();
        let b = make_weideman(40).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.coeffs().len(), 41);
        assert_eq!(a.l(), (40.0 / SQRT_2).sqrt());
    }

    #[test]
    fn w_at_origin() {
        let model = make_weideman(36).unwrap();
        let w0 = model.w(Complex64::new(0.0, 0.0)).unwrap();
        assert!((w0 - 1.0).norm() < 2e-15, "{w0}");
    }

    #[test]
    fn every_degree_passes_self_check() {
        for m in MIN_DEGREE..=MAX_DEGREE {
            let model = make_weideman(m).unwrap();
            assert!(model.coeffs().iter().all(|a| a.is_finite()));
        }
    }

    #[test]
    fn leading_coefficient_matches_closed_form() {
        // a_0 is the mean of e^{-t²}(L² + t²) over θ, which equals L/√π
        let model = make_weideman(50).unwrap();
        assert!((model.coeffs()[0] - model.l() / SQRT_PI).abs() < 1e-14);
    }

    #[test]
    fn lower_half_plane_rejected() {
        let model = make_weideman(36).unwrap();
        assert!(matches!(
            model.w(Complex64::new(1.0, -1e-3)),
            Err(FresnelError::Domain(_))
        ));
    }

    #[test]
    fn w_on_imaginary_axis_is_real() {
        let model = make_weideman(50).unwrap();
        let v = model.w(Complex64::new(0.0, 1.0)).unwrap();
        assert!(v.im.abs() < 1e-16);
        // e·erfc(1)
        assert!((v.re - 0.427_583_576_155_807).abs() < 1e-14, "{}", v.re);
    }
}
