//! Sweep CSV schema: one row per (model, n, param) grid point.
//!
//! Column order is fixed: `model,n,param,realizations,mean_edges,mean_d,
//! sem_d,mean_Delta,mean_delta,mean_r`, then `mean_X,sem_X` for the eight
//! edge sums, then `mean_lnX,sem_lnX,degenerate_lnX` for the eight log
//! products, indices in slot order. Floats are printed with 17 significant
//! digits, so parse → re-emit reproduces the file byte for byte.

use revan_core::ensemble::EnsembleStats;
use revan_core::indices::{PRODUCT_KINDS, SUM_KINDS};
use revan_core::Model;
use std::fmt;
use std::io::{self, Write};

pub const COLUMNS: usize = 50;

pub fn header() -> String {
    let mut columns: Vec<String> = [
        "model",
        "n",
        "param",
        "realizations",
        "mean_edges",
        "mean_d",
        "sem_d",
        "mean_Delta",
        "mean_delta",
        "mean_r",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for kind in SUM_KINDS {
        columns.push(format!("mean_{}", kind.name()));
        columns.push(format!("sem_{}", kind.name()));
    }
    for kind in PRODUCT_KINDS {
        columns.push(format!("mean_ln{}", kind.name()));
        columns.push(format!("sem_ln{}", kind.name()));
        columns.push(format!("degenerate_ln{}", kind.name()));
    }
    debug_assert_eq!(columns.len(), COLUMNS);
    columns.join(",")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: Model,
    pub n: usize,
    pub param: f64,
    pub realizations: u64,
    pub mean_edges: f64,
    pub mean_d: f64,
    pub sem_d: f64,
    pub mean_delta_max: f64,
    pub mean_delta_min: f64,
    pub mean_r: f64,
    /// (mean, sem) per sum index, slot order.
    pub sums: [(f64, f64); 8],
    /// (mean, sem, degenerate count) per log product, slot order.
    pub products: [(f64, f64, u64); 8],
}

impl SweepRow {
    pub fn from_stats(stats: &EnsembleStats) -> Self {
        let spec = stats.spec();
        let mut sums = [(0.0, 0.0); 8];
        for (slot, kind) in SUM_KINDS.iter().enumerate() {
            let w = stats.index_stats(*kind);
            sums[slot] = (w.mean(), w.sem());
        }
        let mut products = [(0.0, 0.0, 0); 8];
        for (slot, kind) in PRODUCT_KINDS.iter().enumerate() {
            let w = stats.index_stats(*kind);
            products[slot] = (w.mean(), w.sem(), stats.degenerate_count(*kind));
        }
        Self {
            model: spec.model,
            n: spec.n,
            param: spec.param,
            realizations: stats.count(),
            mean_edges: stats.edges().mean(),
            mean_d: stats.mean_degree().mean(),
            sem_d: stats.mean_degree().sem(),
            mean_delta_max: stats.max_degree().mean(),
            mean_delta_min: stats.min_degree().mean(),
            mean_r: stats.mean_revan().mean(),
            sums,
            products,
        }
    }

    fn write_line(&self, out: &mut String) {
        use fmt::Write;
        let f = |out: &mut String, x: f64| {
            let _ = write!(out, ",{x:.16e}");
        };
        let _ = write!(out, "{},{}", self.model.name(), self.n);
        f(out, self.param);
        let _ = write!(out, ",{}", self.realizations);
        for x in [
            self.mean_edges,
            self.mean_d,
            self.sem_d,
            self.mean_delta_max,
            self.mean_delta_min,
            self.mean_r,
        ] {
            f(out, x);
        }
        for (mean, sem) in self.sums {
            f(out, mean);
            f(out, sem);
        }
        for (mean, sem, degenerate) in self.products {
            f(out, mean);
            f(out, sem);
            let _ = write!(out, ",{degenerate}");
        }
        out.push('\n');
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepParseError {
    /// 1-based line within the CSV text.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SweepParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SweepParseError {}

fn parse_err(line: usize, message: String) -> SweepParseError {
    SweepParseError { line, message }
}

struct Fields<'a> {
    line: usize,
    iter: std::str::Split<'a, char>,
    column: usize,
}

impl<'a> Fields<'a> {
    fn next(&mut self) -> Result<&'a str, SweepParseError> {
        self.column += 1;
        self.iter.next().ok_or_else(|| {
            parse_err(
                self.line,
                format!("expected {COLUMNS} columns, found {}", self.column - 1),
            )
        })
    }

    fn float(&mut self) -> Result<f64, SweepParseError> {
        let field = self.next()?;
        field
            .parse()
            .map_err(|_| parse_err(self.line, format!("`{field}` is not a float")))
    }

    fn integer<T: std::str::FromStr>(&mut self) -> Result<T, SweepParseError> {
        let field = self.next()?;
        field
            .parse()
            .map_err(|_| parse_err(self.line, format!("`{field}` is not an integer")))
    }
}

fn parse_row(lineno: usize, line: &str) -> Result<SweepRow, SweepParseError> {
    let mut fields = Fields {
        line: lineno,
        iter: line.split(','),
        column: 0,
    };
    let model_field = fields.next()?;
    let model = Model::from_name(model_field)
        .ok_or_else(|| parse_err(lineno, format!("unknown model `{model_field}`")))?;
    let row = SweepRow {
        model,
        n: fields.integer()?,
        param: fields.float()?,
        realizations: fields.integer()?,
        mean_edges: fields.float()?,
        mean_d: fields.float()?,
        sem_d: fields.float()?,
        mean_delta_max: fields.float()?,
        mean_delta_min: fields.float()?,
        mean_r: fields.float()?,
        sums: {
            let mut sums = [(0.0, 0.0); 8];
            for slot in &mut sums {
                *slot = (fields.float()?, fields.float()?);
            }
            sums
        },
        products: {
            let mut products = [(0.0, 0.0, 0); 8];
            for slot in &mut products {
                *slot = (fields.float()?, fields.float()?, fields.integer()?);
            }
            products
        },
    };
    if fields.iter.next().is_some() {
        return Err(parse_err(lineno, format!("more than {COLUMNS} columns")));
    }
    Ok(row)
}

pub fn write_csv(rows: &[SweepRow], mut w: impl Write) -> io::Result<()> {
    let mut text = header();
    text.push('\n');
    for row in rows {
        row.write_line(&mut text);
    }
    w.write_all(text.as_bytes())
}

pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>, SweepParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (_, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file; expected header".into()))?;
    if first != header() {
        return Err(parse_err(1, "header does not match the sweep schema".into()));
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines {
        if line.is_empty() {
            continue;
        }
        rows.push(parse_row(lineno, line)?);
    }
    Ok(rows)
}
