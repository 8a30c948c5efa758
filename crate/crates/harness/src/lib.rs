//! Experiments behind the `fresnel` command: accuracy sweeps, convergence
//! rates, pointwise bound checks, timing, and `erfc` bound checks, each
//! producing a deterministic CSV report.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod experiments;
pub mod grid;
pub mod report;

pub use config::{parse_list, Mode, Oracle, SweepConfig, Target};
pub use error::{HarnessError, Result};
pub use experiments::{appendix, bench, bounds, convergence, eval, sweep, AppendixConfig, BenchConfig, Outcome};
pub use grid::grid;
pub use report::{Cell, Report};
