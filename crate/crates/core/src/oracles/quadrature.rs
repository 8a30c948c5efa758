//! Globally adaptive Gauss–Kronrod (7, 15) quadrature for complex-valued
//! integrands on finite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{FresnelError, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_PANELS: usize = 20_000;

/// Controls for the adaptive integrator and for the truncation of the
/// infinite-range integrals the oracles evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of bisections applied to any single panel.
    pub max_depth: u32,
    /// Integrals over `(-∞, ∞)` of integrands carrying `e^{-t²}` are cut at `±truncation`.
    pub truncation: f64,
}

impl Default for QuadSettings {
    fn default() -> Self {
        QuadSettings {
            rel_tol: 1e-15,
            abs_tol: 1e-300,
            max_depth: 60,
            truncation: 8.6,
        }
    }
}

impl QuadSettings {
    pub fn validate(&self) -> Result<()> {
        if !(1e-16..=1e-6).contains(&self.rel_tol) {
            return Err(FresnelError::InvalidParameter(format!(
                "rel_tol {} outside [1e-16, 1e-6]",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(FresnelError::InvalidParameter("abs_tol must be non-negative".into()));
        }
        if !(self.truncation >= 8.0 && self.truncation.is_finite()) {
            return Err(FresnelError::InvalidParameter(format!(
                "truncation {} must be at least 8",
                self.truncation
            )));
        }
        if self.max_depth == 0 {
            return Err(FresnelError::InvalidParameter("max_depth must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F>(f: &F, a: f64, b: f64, depth: u32) -> Panel
where
    F: Fn(f64) -> Complex64,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut magnitude = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        let pair = f1 + f2;
        kronrod += pair * WGK[j];
        magnitude += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let mut error = ((kronrod - gauss) * half).norm();
    // Gauss and Kronrod agree to rounding: the panel is resolved.
    if error <= 50.0 * f64::EPSILON * magnitude * half.abs() {
        error = 0.0;
    }
    Panel {
        a,
        b,
        value,
        error,
        depth,
    }
}

/// Neumaier-compensated complex sum.
#[derive(Default)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, v: Complex64) {
        self.sum.re = two_sum(self.sum.re, v.re, &mut self.carry.re);
        self.sum.im = two_sum(self.sum.im, v.im, &mut self.carry.im);
    }
    fn total(&self) -> Complex64 {
        self.sum + self.carry
    }
}

fn two_sum(s: f64, v: f64, carry: &mut f64) -> f64 {
    let t = s + v;
    if s.abs() >= v.abs() {
        *carry += (s - t) + v;
    } else {
        *carry += (v - t) + s;
    }
    t
}

/// `∫_a^b f(t) dt`, with the interval first split at each of `breaks`
/// lying strictly inside `(a, b)`. Panels with the largest error estimate
/// are bisected until the summed estimate meets
/// `max(abs_tol, rel_tol · |I|)`.
pub fn integrate<F>(f: F, a: f64, b: f64, breaks: &[f64], settings: &QuadSettings) -> Result<QuadEstimate>
where
    F: Fn(f64) -> Complex64,
{
    settings.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(FresnelError::InvalidParameter(format!("bad interval [{a}, {b}]")));
    }
    let mut edges = vec![a];
    let mut inner: Vec<f64> = breaks.iter().copied().filter(|&p| p > a && p < b).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    edges.extend(inner);
    edges.push(b);

    let mut heap: BinaryHeap<Panel> = edges.windows(2).map(|w| gauss_kronrod(&f, w[0], w[1], 0)).collect();
    let mut evaluations = 15 * heap.len();

    loop {
        let mut value = CompensatedSum::default();
        let mut error = 0.0;
        for p in heap.iter() {
            value.add(p.value);
            error += p.error;
        }
        let value = value.total();
        let target = settings.abs_tol.max(settings.rel_tol * value.norm());
        if error <= target {
            return Ok(QuadEstimate {
                value,
                error,
                evaluations,
            });
        }
        let worst = *heap.peek().expect("at least one panel");
        if worst.depth >= settings.max_depth || heap.len() >= MAX_PANELS {
            return Err(FresnelError::NoConvergence { estimate: value, error });
        }
        heap.pop();
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(gauss_kronrod(&f, worst.a, mid, worst.depth + 1));
        heap.push(gauss_kronrod(&f, mid, worst.b, worst.depth + 1));
        evaluations += 30;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let est = integrate(
            |t| Complex64::new(t.powi(5), 3.0 * t * t),
            0.0,
            2.0,
            &[],
            &QuadSettings::default(),
        )
        .unwrap();
        assert!((est.value.re - 64.0 / 6.0).abs() < 1e-14);
        assert!((est.value.im - 8.0).abs() < 1e-14);
    }

    #[test]
    fn gaussian_integral() {
        let s = QuadSettings::default();
        let est = integrate(
            |t| Complex64::new((-t * t).exp(), 0.0),
            -s.truncation,
            s.truncation,
            &[0.0],
            &s,
        )
        .unwrap();
        assert!((est.value.re - std::f64::consts::PI.sqrt()).abs() < 4e-16);
    }

    #[test]
    fn sharp_lorentzian() {
        // ∫_0^1 ε/(t² + ε²) dt = atan(1/ε)
        let eps = 1e-3;
        let est = integrate(
            |t| Complex64::new(eps / (t * t + eps * eps), 0.0),
            0.0,
            1.0,
            &[],
            &QuadSettings::default(),
        )
        .unwrap();
        assert!((est.value.re / (1.0 / eps).atan() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn depth_exhaustion_reports_estimate() {
        let s = QuadSettings {
            max_depth: 2,
            ..QuadSettings::default()
        };
        match integrate(|t| Complex64::new(t.abs().sqrt(), 0.0), -1.0, 1.0, &[], &s) {
            Err(FresnelError::NoConvergence { estimate, .. }) => assert!((estimate.re - 4.0 / 3.0).abs() < 1e-2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn settings_validation() {
        let bad = QuadSettings {
            rel_tol: 1e-20,
            ..QuadSettings::default()
        };
        assert!(bad.validate().is_err());
        let bad = QuadSettings {
            truncation: 5.0,
            ..QuadSettings::default()
        };
        assert!(bad.validate().is_err());
        assert!(QuadSettings::default().validate().is_ok());
    }
}
