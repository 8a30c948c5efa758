use std::f64::consts::PI;
use std::hint::black_box;
use std::time::Instant;

use fresnel_core::batch::{try_map, try_map_seq};
use fresnel_core::bounds::{erfc_bounds, eta, pointwise_rel_bound};
use fresnel_core::oracles::{
    cs_power_series, erfc_imag_axis, g_magnitude, make_weideman, quad_cs, quad_f, weideman_cs, QuadSettings,
};
use fresnel_core::{f_from_cs, fresnel_cs, fresnel_f, make_rule, FresnelPair};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Oracle, SweepConfig, Target};
use crate::error::{HarnessError, Result};
use crate::grid::grid;
use crate::report::{Cell, Report};

/// Degree of the Weideman expansion when it serves as a reference.
pub const ORACLE_DEGREE: usize = 50;

/// Series terms used when the power series serves as a reference.
pub const SERIES_TERMS: usize = 30;

/// Absolute allowance for rounding when comparing against a bound.
pub const ROUNDING_SLACK: f64 = 10.0 * f64::EPSILON;

/// Errors below this are reported as limited by rounding rather than by `N`.
pub const ROUNDING_FLOOR: f64 = 100.0 * f64::EPSILON;

const SQRT_HALF_PI: f64 = 1.253_314_137_315_500_3;

/// A report plus the checks it failed; an empty list means success.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn oracle_name(o: Oracle) -> &'static str {
    match o {
        Oracle::Quad => "quad",
        Oracle::Weideman => "weideman",
        Oracle::PowerSeries => "power_series",
        Oracle::Dual => "dual (quad and weideman)",
    }
}

/// Reference values of `F` on `xs`, one vector per reference in use.
pub fn f_references(xs: &[f64], oracle: Oracle) -> Result<Vec<Vec<Complex64>>> {
    let settings = QuadSettings::default();
    let quad = || try_map(xs, |x| quad_f(x, &settings));
    let weideman = || {
        let model = make_weideman(ORACLE_DEGREE)?;
        try_map(xs, |x| model.fresnel_f(x))
    };
    Ok(match oracle {
        Oracle::Quad => vec![quad()?],
        Oracle::Weideman => vec![weideman()?],
        Oracle::PowerSeries => vec![try_map(xs, |x| {
            Ok(f_from_cs(cs_power_series(x / SQRT_HALF_PI, SERIES_TERMS)?))
        })?],
        Oracle::Dual => vec![quad()?, weideman()?],
    })
}

/// Reference values of `(C, S)` on `xs`, one vector per reference in use.
pub fn cs_references(xs: &[f64], oracle: Oracle) -> Result<Vec<Vec<FresnelPair>>> {
    let settings = QuadSettings::default();
    let quad = || try_map(xs, |x| quad_cs(x, &settings));
    let weideman = || try_map(xs, |x| weideman_cs(x, ORACLE_DEGREE));
    Ok(match oracle {
        Oracle::Quad => vec![quad()?],
        Oracle::Weideman => vec![weideman()?],
        Oracle::PowerSeries => vec![try_map(xs, |x| cs_power_series(x, SERIES_TERMS))?],
        Oracle::Dual => vec![quad()?, weideman()?],
    })
}

#[derive(Debug, Clone, Copy, Default)]
struct FStats {
    max_abs: f64,
    x_at_max: f64,
    max_rel: f64,
}

fn f_stats(xs: &[f64], approx: &[Complex64], refs: &[Vec<Complex64>]) -> FStats {
    let mut st = FStats::default();
    for (i, (&x, a)) in xs.iter().zip(approx).enumerate() {
        for r in refs {
            let e = (a - r[i]).norm();
            if e > st.max_abs {
                st.max_abs = e;
                st.x_at_max = x;
            }
            let m = r[i].norm();
            if m > 0.0 {
                st.max_rel = st.max_rel.max(e / m);
            }
        }
    }
    st
}

#[derive(Debug, Clone, Copy, Default)]
struct CsStats {
    abs_c: f64,
    abs_s: f64,
    rel_c: f64,
    rel_s: f64,
}

fn cs_stats(approx: &[FresnelPair], refs: &[Vec<FresnelPair>]) -> CsStats {
    let mut st = CsStats::default();
    for (i, a) in approx.iter().enumerate() {
        for r in refs {
            let (dc, ds) = ((a.c - r[i].c).abs(), (a.s - r[i].s).abs());
            st.abs_c = st.abs_c.max(dc);
            st.abs_s = st.abs_s.max(ds);
            if r[i].c != 0.0 {
                st.rel_c = st.rel_c.max(dc / r[i].c.abs());
            }
            if r[i].s != 0.0 {
                st.rel_s = st.rel_s.max(ds / r[i].s.abs());
            }
        }
    }
    st
}

fn describe_grid(report: &mut Report, cfg: &SweepConfig) {
    report.comment(format!(
        "grid: {} equally spaced points on [{}, {}], endpoints included",
        cfg.points, cfg.x_min, cfg.x_max
    ));
    report.comment(format!("oracle: {}", oracle_name(cfg.oracle)));
}

fn show(limit: Option<f64>) -> String {
    limit.map_or_else(|| "none".into(), |v| format!("{v:e}"))
}

fn check(failures: &mut Vec<String>, what: &str, value: f64, limit: Option<f64>) {
    if let Some(limit) = limit {
        if !(value <= limit) {
            failures.push(format!("{what} = {value:.3e} exceeds {limit:.3e}"));
        }
    }
}

/// `F_N`, `C_N`, `S_N` at the given points.
pub fn eval(xs: &[f64], n: usize) -> Result<Outcome> {
    let rule = make_rule(n)?;
    let mut report = Report::new(&["x", "re_f", "im_f", "c", "s"]);
    report.comment(format!("N = {n}"));
    for &x in xs {
        let f = fresnel_f(x, &rule)?;
        let cs = fresnel_cs(x, &rule)?;
        report.push(vec![x.into(), f.re.into(), f.im.into(), cs.c.into(), cs.s.into()]);
    }
    Ok(Outcome {
        report,
        failures: Vec::new(),
    })
}

/// Maximum errors over the grid for each `N` (and each Weideman degree `M`).
pub fn sweep(cfg: &SweepConfig) -> Result<Outcome> {
    cfg.validate()?;
    let xs = cfg.grid();
    match cfg.target {
        Target::F => sweep_f(cfg, &xs),
        Target::Cs => sweep_cs(cfg, &xs),
    }
}

fn sweep_f(cfg: &SweepConfig, xs: &[f64]) -> Result<Outcome> {
    let mut columns = vec!["method", "param"];
    if cfg.mode.abs() {
        columns.extend(["max_abs", "x_at_max_abs"]);
    }
    if cfg.mode.rel() {
        columns.push("max_rel");
    }
    let mut report = Report::new(&columns);
    describe_grid(&mut report, cfg);
    report.comment("expected for N = 12 on [0, 1000]: max abs < 2.9e-16, max rel < 9.3e-16");
    report.comment(format!(
        "thresholds on F_N rows: max_abs {}, max_rel {}",
        show(cfg.max_abs),
        show(cfg.max_rel)
    ));
    let refs = f_references(xs, cfg.oracle)?;
    let mut failures = Vec::new();
    let row = |method: &str, param: usize, st: &FStats| {
        let mut r: Vec<Cell> = vec![method.into(), param.into()];
        if cfg.mode.abs() {
            r.extend([st.max_abs.into(), st.x_at_max.into()]);
        }
        if cfg.mode.rel() {
            r.push(st.max_rel.into());
        }
        r
    };
    for &n in &cfg.n_list {
        let rule = make_rule(n)?;
        let approx = try_map(xs, |x| fresnel_f(x, &rule))?;
        let st = f_stats(xs, &approx, &refs);
        report.push(row("F_N", n, &st));
        if cfg.mode.abs() {
            check(&mut failures, &format!("F_N N={n} max abs"), st.max_abs, cfg.max_abs);
        }
        if cfg.mode.rel() {
            check(&mut failures, &format!("F_N N={n} max rel"), st.max_rel, cfg.max_rel);
        }
    }
    if !cfg.m_list.is_empty() {
        report.comment("weideman rows are measured against quadrature");
        let quad_refs = match cfg.oracle {
            Oracle::Quad | Oracle::Dual => vec![refs[0].clone()],
            _ => f_references(xs, Oracle::Quad)?,
        };
        for &m in &cfg.m_list {
            let model = make_weideman(m)?;
            let approx = try_map(xs, |x| model.fresnel_f(x))?;
            report.push(row("weideman", m, &f_stats(xs, &approx, &quad_refs)));
        }
    }
    Ok(Outcome { report, failures })
}

fn sweep_cs(cfg: &SweepConfig, xs: &[f64]) -> Result<Outcome> {
    let mut columns = vec!["method", "param"];
    if cfg.mode.abs() {
        columns.extend(["max_abs_c", "max_abs_s"]);
    }
    if cfg.mode.rel() {
        columns.extend(["max_rel_c", "max_rel_s"]);
    }
    let mut report = Report::new(&columns);
    describe_grid(&mut report, cfg);
    report.comment("expected for N >= 11 on [0, 20]: max abs <= 4.5e-16, max rel C ~ 3.6e-15, max rel S ~ 2.7e-13");
    let rel_s_limit = cfg.max_rel_s.or(cfg.max_rel);
    report.comment(format!(
        "thresholds on C_N/S_N rows: max_abs {}, max_rel C {}, max_rel S {}",
        show(cfg.max_abs),
        show(cfg.max_rel),
        show(rel_s_limit)
    ));
    let refs = cs_references(xs, cfg.oracle)?;
    let mut failures = Vec::new();
    let row = |method: &str, param: usize, st: &CsStats| {
        let mut r: Vec<Cell> = vec![method.into(), param.into()];
        if cfg.mode.abs() {
            r.extend([st.abs_c.into(), st.abs_s.into()]);
        }
        if cfg.mode.rel() {
            r.extend([st.rel_c.into(), st.rel_s.into()]);
        }
        r
    };
    for &n in &cfg.n_list {
        let rule = make_rule(n)?;
        let approx = try_map(xs, |x| fresnel_cs(x, &rule))?;
        let st = cs_stats(&approx, &refs);
        report.push(row("CS_N", n, &st));
        if cfg.mode.abs() {
            check(
                &mut failures,
                &format!("CS_N N={n} max abs"),
                st.abs_c.max(st.abs_s),
                cfg.max_abs,
            );
        }
        if cfg.mode.rel() {
            check(&mut failures, &format!("C_N N={n} max rel"), st.rel_c, cfg.max_rel);
            check(&mut failures, &format!("S_N N={n} max rel"), st.rel_s, rel_s_limit);
        }
    }
    if !cfg.m_list.is_empty() {
        report.comment("weideman rows are measured against quadrature");
        let quad_refs = match cfg.oracle {
            Oracle::Quad | Oracle::Dual => vec![refs[0].clone()],
            _ => cs_references(xs, Oracle::Quad)?,
        };
        for &m in &cfg.m_list {
            let approx = try_map(xs, |x| weideman_cs(x, m))?;
            report.push(row("weideman", m, &cs_stats(&approx, &quad_refs)));
        }
    }
    Ok(Outcome { report, failures })
}

/// Maximum error of `F_N` per `N`, with the ratio between consecutive `N`.
///
/// For consecutive `N`, `N + 1` with `3 ≤ N ≤ 8` the log-ratio must lie in `[π - 1, π + 1]`.
pub fn convergence(cfg: &SweepConfig) -> Result<Outcome> {
    cfg.validate()?;
    if cfg.n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(HarnessError::Usage("N list must be strictly ascending".into()));
    }
    let xs = cfg.grid();
    let refs = f_references(&xs, cfg.oracle)?;
    let mut report = Report::new(&["N", "max_err", "ratio_to_prev", "implied_rate", "rounding_limited"]);
    describe_grid(&mut report, cfg);
    report.comment(format!(
        "expected: implied_rate = ln(err_N / err_(N+1)) near pi = {PI:.6}, within 1 for N in 3..=8"
    ));
    report.comment(format!("rounding_limited: max_err < {ROUNDING_FLOOR:.3e}"));
    let mut failures = Vec::new();
    let mut prev: Option<(usize, f64)> = None;
    for &n in &cfg.n_list {
        let rule = make_rule(n)?;
        let approx = try_map(&xs, |x| fresnel_f(x, &rule))?;
        let err = f_stats(&xs, &approx, &refs).max_abs;
        let (ratio, rate) = match prev {
            Some((_, e)) => {
                let ratio = e / err;
                (Cell::Num(ratio), Cell::Num(ratio.ln()))
            }
            None => (Cell::Empty, Cell::Empty),
        };
        if let (Some((pn, pe)), true) = (prev, (3..=8).contains(&(n - 1))) {
            let rate = (pe / err).ln();
            if pn == n - 1 && !((PI - 1.0)..=(PI + 1.0)).contains(&rate) {
                failures.push(format!("rate from N={pn} to N={n} is {rate:.3}, outside [pi-1, pi+1]"));
            }
        }
        report.push(vec![n.into(), err.into(), ratio, rate, (err < ROUNDING_FLOOR).into()]);
        prev = Some((n, err));
    }
    Ok(Outcome { report, failures })
}

/// Pointwise error of `F_N` against the bound `η_N(x)` and the relative bound.
pub fn bounds(cfg: &SweepConfig) -> Result<Outcome> {
    cfg.validate()?;
    let xs = cfg.grid();
    let refs = f_references(&xs, cfg.oracle)?;
    let mut report = Report::new(&["N", "x", "measured_err", "eta", "rel_err", "rel_bound", "violation"]);
    describe_grid(&mut report, cfg);
    report.comment(format!(
        "violation: measured_err > eta + {ROUNDING_SLACK:.3e} or rel_err > rel_bound + {ROUNDING_SLACK:.3e}/|F|"
    ));
    let mut failures = Vec::new();
    for &n in &cfg.n_list {
        let rule = make_rule(n)?;
        let idx: Vec<f64> = (0..xs.len()).map(|i| i as f64).collect();
        let rows = try_map(&idx, |fi| {
            let i = fi as usize;
            let x = xs[i];
            let a = fresnel_f(x, &rule)?;
            let err = refs.iter().map(|r| (a - r[i]).norm()).fold(0.0, f64::max);
            let mag = refs[0][i].norm();
            Ok((x, err, eta(x, n).eta, err / mag, pointwise_rel_bound(x, n), mag))
        })?;
        let (mut worst, mut x_worst, mut eta_max, mut x_eta, mut count) = (0.0, 0.0, 0.0, 0.0, 0usize);
        for &(x, err, e, rel, rb, mag) in &rows {
            let bad = err > e + ROUNDING_SLACK || rel > rb + ROUNDING_SLACK / mag;
            count += bad as usize;
            if err > worst {
                worst = err;
                x_worst = x;
            }
            if e > eta_max {
                eta_max = e;
                x_eta = x;
            }
            report.push(vec![
                n.into(),
                x.into(),
                err.into(),
                e.into(),
                rel.into(),
                rb.into(),
                bad.into(),
            ]);
        }
        report.comment(format!(
            "N = {n}: max error {worst:.3e} at x = {x_worst:.4}; max eta {eta_max:.3e} at x = {x_eta:.4}; \
             overestimate factor {:.3}; violations {count}",
            eta_max / worst
        ));
        if count > 0 {
            failures.push(format!("N = {n}: {count} bound violations"));
        }
    }
    Ok(Outcome { report, failures })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub length: usize,
    pub n: usize,
    pub m: usize,
    pub repeats: usize,
    pub x_max: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            length: 10_000_000,
            n: fresnel_core::DEFAULT_N,
            m: 36,
            repeats: 5,
            x_max: 1000.0,
        }
    }
}

const BENCH_CHUNK: usize = 1 << 16;

/// Wall-clock time of one pass of `f` over `xs`, evaluated chunk by chunk.
fn time_pass<F>(xs: &[f64], parallel: bool, f: &F) -> Result<f64>
where
    F: Fn(f64) -> fresnel_core::Result<Complex64> + Sync + Send,
{
    let start = Instant::now();
    let mut checksum = 0.0;
    for chunk in xs.chunks(BENCH_CHUNK) {
        let out = if parallel {
            try_map(chunk, f)?
        } else {
            try_map_seq(chunk, f)?
        };
        checksum += out.iter().map(|v| v.re).sum::<f64>();
    }
    black_box(checksum);
    Ok(start.elapsed().as_secs_f64())
}

/// Times `F_N` against the Weideman route on one vector. Informational only.
pub fn bench(cfg: &BenchConfig) -> Result<Outcome> {
    if cfg.length == 0 {
        return Err(HarnessError::Usage("vector length must be at least 1".into()));
    }
    if cfg.repeats == 0 {
        return Err(HarnessError::Usage("repeats must be at least 1".into()));
    }
    let xs = grid(0.0, cfg.x_max, cfg.length);
    let rule = make_rule(cfg.n)?;
    let model = make_weideman(cfg.m)?;
    let f_n = |x: f64| fresnel_f(x, &rule);
    let weideman = |x: f64| model.fresnel_f(x);

    let mut report = Report::new(&["method", "param", "execution", "mean_seconds", "per_point_ns"]);
    report.comment(format!(
        "vector: {} equally spaced points on [0, {}]; mean over {} runs after one discarded warm-up",
        cfg.length, cfg.x_max, cfg.repeats
    ));
    report.comment(format!(
        "operation count per point, F_N: 2 complex exponentials and slightly more than N = {} each of real \
         multiplies/divides, real adds, complex multiplies and complex adds",
        cfg.n
    ));
    report.comment(format!(
        "operation count per point, weideman: 1 complex exponential plus M = {} complex multiplies and M \
         complex adds (Horner)",
        cfg.m
    ));
    report.comment("accuracy pairing: N = 6 with M = 18 for 1e-8, N = 12 with M = 36 for 1e-15");
    report.comment("reference timing for a 1e7 vector: 11.1 s against 15.6 s, F_N the faster");

    let mut modes = vec![("sequential", false)];
    if cfg!(feature = "parallel") {
        modes.push(("parallel", true));
    }
    for (label, parallel) in modes {
        for (method, param, which) in [("F_N", cfg.n, 0), ("weideman", cfg.m, 1)] {
            let run = || match which {
                0 => time_pass(&xs, parallel, &f_n),
                _ => time_pass(&xs, parallel, &weideman),
            };
            run()?;
            let mut total = 0.0;
            for _ in 0..cfg.repeats {
                total += run()?;
            }
            let mean = total / cfg.repeats as f64;
            report.push(vec![
                method.into(),
                param.into(),
                label.into(),
                mean.into(),
                (mean * 1e9 / cfg.length as f64).into(),
            ]);
        }
    }
    Ok(Outcome {
        report,
        failures: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendixConfig {
    pub points: usize,
    pub y_max: f64,
    pub samples: usize,
    pub re_max: f64,
    pub im_max: f64,
    pub seed: u64,
}

impl Default for AppendixConfig {
    fn default() -> Self {
        AppendixConfig {
            points: 500,
            y_max: 6.0,
            samples: 200,
            re_max: 3.0,
            im_max: 3.0,
            seed: 20_100_901,
        }
    }
}

/// Relative allowance when a sampled `|erfc|` sits on one of its bounds.
const BOUND_TOLERANCE: f64 = 1e-13;

/// `|erfc|` against its lower and upper bounds on the imaginary axis and
/// at sampled right half-plane points, plus `|G(iy)| ≥ 1` on the axis.
pub fn appendix(cfg: &AppendixConfig) -> Result<Outcome> {
    if cfg.points < 2 || cfg.y_max <= 0.0 {
        return Err(HarnessError::Usage(
            "need at least 2 points on a positive y range".into(),
        ));
    }
    if !(cfg.re_max > 0.0 && cfg.im_max >= 0.0) {
        return Err(HarnessError::Usage("sampling box must have positive width".into()));
    }
    let model = make_weideman(ORACLE_DEGREE)?;
    let mut report = Report::new(&["kind", "re", "im", "abs_erfc", "lower", "upper", "in_range"]);
    report.comment(format!(
        "axis: {} points y in [0, {}]; plane: {} points re in [0, {}), im in [-{}, {}], seed {}",
        cfg.points, cfg.y_max, cfg.samples, cfg.re_max, cfg.im_max, cfg.im_max, cfg.seed
    ));
    report.comment("plane values use erfc(z) = exp(-z^2) w(iz); G rows hold |G(iy)| in abs_erfc with lower bound 1");
    report.comment(format!(
        "in_range allows a relative {BOUND_TOLERANCE:e} on either bound"
    ));
    let mut failures = Vec::new();
    let mut emit = |report: &mut Report, kind: &str, z: Complex64, value: f64, lower: f64, upper: Option<f64>| {
        let ok = value >= lower * (1.0 - BOUND_TOLERANCE) && upper.is_none_or(|u| value <= u * (1.0 + BOUND_TOLERANCE));
        if !ok {
            failures.push(format!("{kind} at {z}: {value:e} outside [{lower:e}, {upper:?}]"));
        }
        report.push(vec![
            kind.into(),
            z.re.into(),
            z.im.into(),
            value.into(),
            lower.into(),
            upper.map_or(Cell::Empty, Cell::Num),
            ok.into(),
        ]);
    };
    let plane = |z: Complex64| -> Result<f64> {
        let w = model.w(Complex64::i() * z)?;
        Ok(((-z * z).exp() * w).norm())
    };
    let ys = grid(0.0, cfg.y_max, cfg.points);
    for &y in &ys {
        let z = Complex64::new(0.0, y);
        let b = erfc_bounds(z)?;
        emit(
            &mut report,
            "axis",
            z,
            erfc_imag_axis(y)?.norm(),
            b.lower,
            Some(b.upper),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fixed = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    let sampled = (0..cfg.samples).map(|_| {
        Complex64::new(
            rng.random_range(0.0..cfg.re_max),
            rng.random_range(-cfg.im_max..=cfg.im_max),
        )
    });
    for z in fixed.into_iter().chain(sampled.collect::<Vec<_>>()) {
        let b = erfc_bounds(z)?;
        emit(&mut report, "plane", z, plane(z)?, b.lower, Some(b.upper));
    }
    for &y in &ys {
        emit(&mut report, "G", Complex64::new(0.0, y), g_magnitude(y)?, 1.0, None);
    }
    Ok(Outcome { report, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Mode;

    fn small(target: Target) -> SweepConfig {
        SweepConfig {
            x_min: 0.0,
            x_max: 20.0,
            points: 200,
            target,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn eval_origin_row() {
        let out = eval(&[0.0], 12).unwrap();
        let row = &out.report.rows()[0];
        let nums: Vec<f64> = row.iter().map(|c| c.as_f64().unwrap()).collect();
        assert_eq!(nums, vec![0.0, 0.5, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn eval_rejects_infinity() {
        let err = eval(&[f64::INFINITY], 12).unwrap_err();
        assert!(err.to_string().contains("non-finite input"));
    }

    #[test]
    fn sweep_columns_follow_mode() {
        let cfg = SweepConfig {
            mode: Mode::Abs,
            ..small(Target::F)
        };
        let out = sweep(&cfg).unwrap();
        assert_eq!(out.report.columns(), &["method", "param", "max_abs", "x_at_max_abs"]);
        let cfg = SweepConfig {
            mode: Mode::Rel,
            ..small(Target::Cs)
        };
        let out = sweep(&cfg).unwrap();
        assert_eq!(out.report.columns(), &["method", "param", "max_rel_c", "max_rel_s"]);
    }

    #[test]
    fn sweep_threshold_failure() {
        let cfg = SweepConfig {
            n_list: vec![3],
            max_abs: Some(1e-10),
            ..small(Target::F)
        };
        let out = sweep(&cfg).unwrap();
        assert_eq!(out.failures.len(), 1);
    }

    #[test]
    fn weideman_rows_appear() {
        let cfg = SweepConfig {
            m_list: vec![18, 36],
            oracle: Oracle::Weideman,
            ..small(Target::F)
        };
        let out = sweep(&cfg).unwrap();
        assert_eq!(out.report.rows().len(), 3);
        let rel = out.report.numbers("max_rel");
        assert!(rel[1] > rel[2]);
    }

    #[test]
    fn power_series_oracle_near_origin() {
        let cfg = SweepConfig {
            x_max: 1.5,
            oracle: Oracle::PowerSeries,
            ..small(Target::Cs)
        };
        let out = sweep(&cfg).unwrap();
        assert!(out.report.numbers("max_abs_c")[0] < 1e-15);
    }

    #[test]
    fn convergence_needs_ascending() {
        let cfg = SweepConfig {
            n_list: vec![5, 4],
            ..small(Target::F)
        };
        assert!(matches!(convergence(&cfg), Err(HarnessError::Usage(_))));
    }

    #[test]
    fn bounds_origin_row() {
        let cfg = SweepConfig {
            n_list: vec![2],
            x_max: 10.0,
            points: 11,
            oracle: Oracle::Quad,
            ..SweepConfig::default()
        };
        let out = bounds(&cfg).unwrap();
        assert!(out.passed());
        let first = &out.report.rows()[0];
        assert_eq!(first[2].as_f64(), Some(0.0));
        assert_eq!(first[3].as_f64(), Some(0.0));
    }

    #[test]
    fn bench_rejects_empty_vector() {
        let cfg = BenchConfig {
            length: 0,
            ..BenchConfig::default()
        };
        assert!(matches!(bench(&cfg), Err(HarnessError::Usage(_))));
    }

    #[test]
    fn bench_rows() {
        let cfg = BenchConfig {
            length: 1000,
            repeats: 2,
            ..BenchConfig::default()
        };
        let out = bench(&cfg).unwrap();
        let expected = if cfg!(feature = "parallel") { 4 } else { 2 };
        assert_eq!(out.report.rows().len(), expected);
        assert!(out.report.numbers("per_point_ns").iter().all(|&t| t > 0.0));
    }

    #[test]
    fn appendix_fixed_points() {
        let cfg = AppendixConfig {
            points: 20,
            samples: 10,
            ..AppendixConfig::default()
        };
        let out = appendix(&cfg).unwrap();
        assert!(out.passed(), "{:?}", out.failures);
        let origin = out.report.rows().iter().find(|r| r[0] == Cell::from("plane")).unwrap();
        assert!((origin[3].as_f64().unwrap() - 1.0).abs() <= 2.0 * f64::EPSILON);
        assert_eq!((origin[4].as_f64(), origin[5].as_f64()), (Some(1.0), Some(1.0)));
    }
}
