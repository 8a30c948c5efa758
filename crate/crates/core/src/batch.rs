//! Evaluation over many points. With the `parallel` feature the default
//! entry points spread work over the rayon pool; the `_seq` variants always
//! run on the calling thread. Output order always matches input order.

use num_complex::Complex64;

use crate::error::Result;
use crate::fresnel::{fresnel_cs, fresnel_f, FresnelPair};
use crate::rule::QuadratureRule;

/// Applies `f` to every element of `xs` on the calling thread, stopping at the first error.
pub fn try_map_seq<T, F>(xs: &[f64], f: F) -> Result<Vec<T>>
where
    F: Fn(f64) -> Result<T>,
{
    xs.iter().map(|&x| f(x)).collect()
}

/// Applies `f` to every element of `xs`, in parallel when the feature is enabled.
#[cfg(feature = "parallel")]
pub fn try_map<T, F>(xs: &[f64], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;
    xs.par_iter().map(|&x| f(x)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn try_map<T, F>(xs: &[f64], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> Result<T> + Sync + Send,
{
    try_map_seq(xs, f)
}

pub fn fresnel_f_many(xs: &[f64], rule: &QuadratureRule) -> Result<Vec<Complex64>> {
    try_map(xs, |x| fresnel_f(x, rule))
}

pub fn fresnel_f_many_seq(xs: &[f64], rule: &QuadratureRule) -> Result<Vec<Complex64>> {
    try_map_seq(xs, |x| fresnel_f(x, rule))
}

pub fn fresnel_cs_many(xs: &[f64], rule: &QuadratureRule) -> Result<Vec<FresnelPair>> {
    try_map(xs, |x| fresnel_cs(x, rule))
}

pub fn fresnel_cs_many_seq(xs: &[f64], rule: &QuadratureRule) -> Result<Vec<FresnelPair>> {
    try_map_seq(xs, |x| fresnel_cs(x, rule))
}
