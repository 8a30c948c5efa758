use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Flag(bool),
    Empty,
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            // 17 significant digits round-trip every double
            Cell::Num(v) => write!(out, "{v:.16e}"),
            Cell::Int(v) => write!(out, "{v}"),
            Cell::Text(v) => write!(out, "{v}"),
            Cell::Flag(v) => write!(out, "{v}"),
            Cell::Empty => Ok(()),
        }
        .expect("writing to a String cannot fail");
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Num(v) => Some(v),
            Cell::Int(v) => Some(v as f64),
            _ => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// A CSV table: one header line, then `#` comment lines, then data rows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    columns: Vec<String>,
    comments: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new<S: AsRef<str>>(columns: &[S]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.as_ref().to_owned()).collect(),
            ..Report::default()
        }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    /// Index of the named column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// The numeric values of one column, in row order.
    pub fn numbers(&self, name: &str) -> Vec<f64> {
        let Some(i) = self.column(name) else {
            return Vec::new();
        };
        self.rows.iter().filter_map(|r| r[i].as_f64()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.render(&mut out);
            }
            out.push('\n');
        }
        out
    }

    /// Writes to `path`, or to standard output when `path` is `None`.
    pub fn save(&self, path: Option<&Path>) -> Result<()> {
        let text = self.to_csv();
        match path {
            Some(p) => fs::write(p, text).map_err(|source| HarnessError::Io {
                path: p.to_owned(),
                source,
            }),
            None => std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(|source| HarnessError::Io {
                    path: "<stdout>".into(),
                    source,
                }),
        }
    }
}
