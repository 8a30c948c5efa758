//! Double-precision Fresnel integrals
//!
//! ```text
//! F(x) = e^{-iπ/4}/√π ∫_x^∞ e^{it²} dt,   C(x) + iS(x) = ∫_0^x e^{iπt²/2} dt
//! ```
//!
//! computed by an `N`-point modified trapezium rule, together with explicit
//! error bounds for that rule and independent reference evaluations.
//!
//! ```
//! use fresnel_core::{fresnel_f, make_rule};
//!
//! let rule = make_rule(12).unwrap();
//! let f = fresnel_f(0.0, &rule).unwrap();
//! assert_eq!(f.re, 0.5);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod batch;
pub mod bounds;
mod error;
mod fresnel;
pub mod oracles;
mod rule;

pub use batch::{fresnel_cs_many, fresnel_cs_many_seq, fresnel_f_many, fresnel_f_many_seq};
pub use error::{FresnelError, Result};
pub use fresnel::{
    aux_ab, boundary_term, cis, cs_from_f, edge_ratios, f_from_cs, fresnel_cs, fresnel_f, fresnel_f_complex,
    half_pi_x_sq, hunter_regan_f, plain_trapezium_f, FresnelPair, EDGE_SATURATION, EDGE_TAYLOR, POLE_RADIUS,
};
pub use rule::{make_rule, QuadratureRule};

pub type ComplexValue = num_complex::Complex64;

/// The node count used when none is given.
pub const DEFAULT_N: usize = 12;
