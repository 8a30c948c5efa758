use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fresnel_harness::config::read_config_file;
use fresnel_harness::{
    appendix, bench, bounds, convergence, eval, parse_list, sweep, AppendixConfig, BenchConfig, HarnessError, Mode,
    Oracle, Outcome, SweepConfig, Target,
};

#[derive(Parser)]
#[command(
    name = "fresnel",
    version,
    about = "Accuracy, bound and timing experiments for the Fresnel integral approximation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_N, C_N and S_N at the given points.
    Eval {
        #[arg(allow_negative_numbers = true, required = true)]
        xs: Vec<f64>,
        #[arg(long, default_value_t = fresnel_core::DEFAULT_N)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum absolute and relative errors over a grid.
    Sweep(GridArgs),
    /// Error decay from one N to the next.
    Convergence(GridArgs),
    /// Pointwise errors against the error bound.
    Bounds(GridArgs),
    /// Time F_N against the Weideman expansion on one long vector.
    Bench {
        #[arg(long, default_value_t = 10_000_000)]
        length: usize,
        #[arg(long, default_value_t = fresnel_core::DEFAULT_N)]
        n: usize,
        #[arg(long, default_value_t = 36)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds on |erfc| along the imaginary axis and in the right half-plane.
    Appendix {
        #[arg(long, default_value_t = 500)]
        points: usize,
        #[arg(long, default_value_t = 6.0)]
        ymax: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = AppendixConfig::default().seed)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GridArgs {
    /// File of `key = value` lines; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    xmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    xmax: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Values of N, e.g. `12`, `3,5,8` or `1..8`.
    #[arg(long, value_parser = list_arg)]
    n: Option<List>,
    /// Weideman degrees to include, e.g. `18,36`.
    #[arg(long, value_parser = list_arg)]
    m: Option<List>,
    #[arg(long, value_enum)]
    oracle: Option<Oracle>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, value_enum)]
    target: Option<Target>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    max_abs: Option<f64>,
    #[arg(long)]
    max_rel: Option<f64>,
    #[arg(long)]
    max_rel_s: Option<f64>,
}

#[derive(Clone)]
struct List(Vec<usize>);

fn list_arg(text: &str) -> Result<List, String> {
    parse_list(text).map(List)
}

impl GridArgs {
    fn resolve(self, mut cfg: SweepConfig) -> Result<SweepConfig, HarnessError> {
        if let Some(path) = &self.config {
            cfg.apply(&read_config_file(path)?)?;
        }
        cfg.x_min = self.xmin.unwrap_or(cfg.x_min);
        cfg.x_max = self.xmax.unwrap_or(cfg.x_max);
        cfg.points = self.points.unwrap_or(cfg.points);
        cfg.n_list = self.n.map_or(cfg.n_list, |l| l.0);
        cfg.m_list = self.m.map_or(cfg.m_list, |l| l.0);
        cfg.oracle = self.oracle.unwrap_or(cfg.oracle);
        cfg.mode = self.mode.unwrap_or(cfg.mode);
        cfg.target = self.target.unwrap_or(cfg.target);
        cfg.output = self.out.or(cfg.output);
        cfg.max_abs = self.max_abs.or(cfg.max_abs);
        cfg.max_rel = self.max_rel.or(cfg.max_rel);
        cfg.max_rel_s = self.max_rel_s.or(cfg.max_rel_s);
        Ok(cfg)
    }
}

fn convergence_defaults() -> SweepConfig {
    SweepConfig {
        x_max: 50.0,
        points: 4000,
        n_list: (1..=12).collect(),
        ..SweepConfig::default()
    }
}

fn bounds_defaults() -> SweepConfig {
    SweepConfig {
        x_max: 50.0,
        points: 2000,
        n_list: (1..=8).collect(),
        oracle: Oracle::Quad,
        ..SweepConfig::default()
    }
}

fn run(cli: Cli) -> Result<Outcome, HarnessError> {
    let (outcome, out) = match cli.command {
        Command::Eval { xs, n, out } => (eval(&xs, n)?, out),
        Command::Sweep(args) => {
            let cfg = args.resolve(SweepConfig::default())?;
            (sweep(&cfg)?, cfg.output)
        }
        Command::Convergence(args) => {
            let cfg = args.resolve(convergence_defaults())?;
            (convergence(&cfg)?, cfg.output)
        }
        Command::Bounds(args) => {
            let cfg = args.resolve(bounds_defaults())?;
            (bounds(&cfg)?, cfg.output)
        }
        Command::Bench {
            length,
            n,
            m,
            repeats,
            out,
        } => {
            let cfg = BenchConfig {
                length,
                n,
                m,
                repeats,
                ..BenchConfig::default()
            };
            (bench(&cfg)?, out)
        }
        Command::Appendix {
            points,
            ymax,
            samples,
            seed,
            out,
        } => {
            let cfg = AppendixConfig {
                points,
                y_max: ymax,
                samples,
                seed,
                ..AppendixConfig::default()
            };
            (appendix(&cfg)?, out)
        }
    };
    outcome.report.save(out.as_deref())?;
    Ok(outcome)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) if outcome.passed() => ExitCode::SUCCESS,
        Ok(outcome) => {
            for f in &outcome.failures {
                eprintln!("FAIL: {f}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
