use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::error::{HarnessError, Result};

/// Reference used to measure errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Quad,
    Weideman,
    #[value(name = "power_series")]
    PowerSeries,
    /// Quadrature and the Weideman expansion, keeping the larger error.
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Abs,
    Rel,
    Both,
}

impl Mode {
    pub fn abs(self) -> bool {
        matches!(self, Mode::Abs | Mode::Both)
    }

    pub fn rel(self) -> bool {
        matches!(self, Mode::Rel | Mode::Both)
    }
}

/// Which function the sweep measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    F,
    Cs,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub n_list: Vec<usize>,
    pub m_list: Vec<usize>,
    pub oracle: Oracle,
    pub output: Option<PathBuf>,
    pub mode: Mode,
    pub target: Target,
    pub max_abs: Option<f64>,
    pub max_rel: Option<f64>,
    /// Separate relative threshold for `S` when the target is `C`/`S`.
    pub max_rel_s: Option<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            x_min: 0.0,
            x_max: 1000.0,
            points: 40_000,
            n_list: vec![fresnel_core::DEFAULT_N],
            m_list: Vec::new(),
            oracle: Oracle::Dual,
            output: None,
            mode: Mode::Both,
            target: Target::F,
            max_abs: None,
            max_rel: None,
            max_rel_s: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min.is_finite() && self.x_max.is_finite() && self.x_min < self.x_max) {
            return Err(HarnessError::Usage(format!(
                "need finite xmin < xmax, got [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        if self.points < 2 {
            return Err(HarnessError::Usage(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if self.n_list.is_empty() {
            return Err(HarnessError::Usage("empty N list".into()));
        }
        if let Some(n) = self.n_list.iter().find(|&&n| n == 0 || n > 1000) {
            return Err(HarnessError::Usage(format!("N = {n} outside [1, 1000]")));
        }
        if let Some(m) = self.m_list.iter().find(|&&m| !(4..=128).contains(&m)) {
            return Err(HarnessError::Usage(format!("M = {m} outside [4, 128]")));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        crate::grid::grid(self.x_min, self.x_max, self.points)
    }

    /// Overrides fields from `key = value` entries.
    pub fn apply(&mut self, entries: &BTreeMap<String, String>) -> Result<()> {
        for (key, value) in entries {
            match key.as_str() {
                "xmin" => self.x_min = parse_num(key, value)?,
                "xmax" => self.x_max = parse_num(key, value)?,
                "points" => self.points = parse_num(key, value)?,
                "n" => self.n_list = parse_list(value).map_err(HarnessError::Config)?,
                "m" => self.m_list = parse_list(value).map_err(HarnessError::Config)?,
                "oracle" => self.oracle = parse_enum(key, value)?,
                "mode" => self.mode = parse_enum(key, value)?,
                "target" => self.target = parse_enum(key, value)?,
                "out" => self.output = Some(PathBuf::from(value)),
                "max_abs" => self.max_abs = Some(parse_num(key, value)?),
                "max_rel" => self.max_rel = Some(parse_num(key, value)?),
                "max_rel_s" => self.max_rel_s = Some(parse_num(key, value)?),
                _ => return Err(HarnessError::Config(format!("unknown key `{key}`"))),
            }
        }
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| HarnessError::Config(format!("bad value `{value}` for `{key}`")))
}

fn parse_enum<T: ValueEnum>(key: &str, value: &str) -> Result<T> {
    T::from_str(value, true).map_err(|_| HarnessError::Config(format!("bad value `{value}` for `{key}`")))
}

/// Parses `"3,5,8"` or an inclusive range `"1..8"` (or a mix, `"1..4,10"`).
pub fn parse_list(text: &str) -> std::result::Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| format!("bad range `{part}`"))?;
            let b: usize = b.trim().parse().map_err(|_| format!("bad range `{part}`"))?;
            if a > b {
                return Err(format!("empty range `{part}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("bad integer `{part}`"))?);
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

/// Reads `key = value` lines; blank lines and `#` comments are skipped.
pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| HarnessError::Config(format!("line {}: expected key = value", i + 1)))?;
        map.insert(k.trim().replace('-', "_"), v.trim().to_owned());
    }
    Ok(map)
}
