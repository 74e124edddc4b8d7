//! Subcommand implementations. Everything here returns `CliError`, whose
//! variants carry the process exit code: usage 2, input format 3, tolerance
//! failure 1.

use crate::{edgelist, grid, run, sweep, CliError};
use revan_core::dense_limit::{self, ScalingCurve};
use revan_core::ensemble::EnsembleSpec;
use revan_core::indices::{IndexKind, PRODUCT_KINDS, SUM_KINDS};
use revan_core::models::{self, SeedSpec};
use revan_core::{Form, Model, Variant};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

/// Write via a sibling temp file and rename, so readers never observe a
/// half-written file.
fn write_atomic(
    path: &Path,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let cannot = |e| usage(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(cannot)?;
    write(tmp.as_file_mut()).map_err(cannot)?;
    tmp.persist(path)
        .map_err(|e| usage(format!("cannot write {}: {}", path.display(), e.error)))?;
    Ok(())
}

pub fn cmd_generate(
    model: Model,
    n: usize,
    param: f64,
    seed: u64,
    index: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = models::generate(
        model,
        n,
        param,
        SeedSpec {
            master_seed: seed,
            realization_index: index,
        },
    )
    .map_err(|e| usage(e.to_string()))?;
    match out {
        Some(path) => write_atomic(path, |w| edgelist::write_edge_list(&g, w)),
        None => {
            let stdout = std::io::stdout();
            edgelist::write_edge_list(&g, stdout.lock())
                .map_err(|e| usage(format!("cannot write to stdout: {e}")))
        }
    }
}

pub fn cmd_compute(path: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let g = edgelist::parse_edge_list(&text)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))?;
    let profile = g.degree_profile();
    let report = revan_core::indices::full_report(&g);

    let mut out = String::new();
    use std::fmt::Write as _;
    let _ = writeln!(out, "n {}", g.vertex_count());
    let _ = writeln!(out, "m {}", g.edge_count());
    let _ = writeln!(out, "Delta {}", profile.delta_max());
    let _ = writeln!(out, "delta {}", profile.delta_min());
    let _ = writeln!(out, "connected {}", g.is_connected());
    for kind in SUM_KINDS {
        let _ = writeln!(out, "{} {}", kind.name(), report.value(kind));
    }
    for kind in PRODUCT_KINDS {
        let _ = writeln!(out, "ln{} {}", kind.name(), report.value(kind));
    }
    print!("{out}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_ensemble(
    model: Model,
    n: usize,
    grid_spec: &str,
    realizations: u64,
    seed: u64,
    threads: usize,
    out: &Path,
) -> Result<(), CliError> {
    let points = grid::parse_grid(grid_spec).map_err(usage)?;
    if realizations == 0 {
        return Err(usage("ensemble needs at least 1 realization"));
    }
    // Reject bad grid points before spending any compute.
    for &param in &points {
        models::validate(model, n, param)
            .map_err(|e| usage(format!("grid point {param}: {e}")))?;
    }

    let mut rows = Vec::with_capacity(points.len());
    let started = Instant::now();
    for (i, &param) in points.iter().enumerate() {
        let point_started = Instant::now();
        let spec = EnsembleSpec {
            model,
            n,
            param,
            realizations,
            master_seed: seed,
        };
        let stats = run::run_ensemble_parallel(&spec, threads)
            .map_err(|e| usage(e.to_string()))?;
        let row = sweep::SweepRow::from_stats(&stats);
        eprintln!(
            "[{}/{}] {} n={} param={:.6} R={}: mean_r={:.3} ({:.1}s)",
            i + 1,
            points.len(),
            model.name(),
            n,
            param,
            realizations,
            row.mean_r,
            point_started.elapsed().as_secs_f64(),
        );
        rows.push(row);
    }
    write_atomic(out, |w| sweep::write_csv(&rows, w))?;
    eprintln!(
        "wrote {} rows to {} in {:.1}s",
        rows.len(),
        out.display(),
        started.elapsed().as_secs_f64(),
    );
    Ok(())
}

/// The per-size normalized curve of one index: abscissa is the matching
/// mean degree column (`mean_r` or `mean_d`), ordinate the ensemble mean
/// divided by n. Rows with non-finite coordinates (e.g. an all-degenerate
/// product mean) are skipped.
pub fn curve_points(rows: &[sweep::SweepRow], kind: IndexKind) -> Vec<(f64, f64)> {
    rows.iter()
        .filter_map(|row| {
            let x = match kind.variant {
                Variant::Revan => row.mean_r,
                Variant::Degree => row.mean_d,
            };
            let y = match kind.form {
                Form::Sum => row.sums[kind.slot()].0,
                Form::Product => row.products[kind.slot()].0,
            } / row.n as f64;
            (x.is_finite() && y.is_finite()).then_some((x, y))
        })
        .collect()
}

pub fn parse_index_list(names: &str) -> Result<Vec<IndexKind>, CliError> {
    let kinds = names
        .split(',')
        .map(|name| {
            IndexKind::from_name(name.trim())
                .ok_or_else(|| usage(format!("unknown index `{}`", name.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if kinds.is_empty() {
        return Err(usage("no indices given"));
    }
    Ok(kinds)
}

pub fn cmd_collapse(
    files: &[PathBuf],
    index_names: &str,
    r_min: f64,
    tolerance: f64,
) -> Result<(), CliError> {
    let kinds = parse_index_list(index_names)?;
    if files.len() < 2 {
        return Err(usage("collapse needs at least 2 sweep CSVs"));
    }
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(usage(format!("tolerance {tolerance} is not a non-negative number")));
    }

    let mut sweeps = Vec::with_capacity(files.len());
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let rows = sweep::parse_csv(&text)
            .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))?;
        let Some(n) = rows.first().map(|row| row.n) else {
            return Err(CliError::Format(format!("{}: no data rows", path.display())));
        };
        if rows.iter().any(|row| row.n != n) {
            return Err(CliError::Format(format!(
                "{}: mixed graph sizes in one sweep",
                path.display()
            )));
        }
        sweeps.push((path, n, rows));
    }

    let mut worst = 0.0f64;
    for kind in &kinds {
        let mut curves = Vec::with_capacity(sweeps.len());
        for (path, n, rows) in &sweeps {
            let curve = ScalingCurve::new(*n, curve_points(rows, *kind)).map_err(|e| {
                CliError::Format(format!("{}: {e} (index {kind})", path.display()))
            })?;
            curves.push(curve);
        }
        let collapse = dense_limit::collapse_deviation(&curves, r_min)
            .map_err(|e| usage(format!("index {kind}: {e}")))?;
        worst = worst.max(collapse);

        // Prediction deviations are diagnostics: only the collapse gates the
        // exit code.
        let mut line = format!("{kind}: collapse {collapse:.6}; prediction");
        for curve in &curves {
            let deviation = dense_limit::prediction_deviation(curve, *kind, r_min)
                .map_err(|e| usage(format!("index {kind}: {e}")))?;
            line.push_str(&format!(" n={} {deviation:.6}", curve.n()));
        }
        println!("{line} [{}]", if collapse <= tolerance { "ok" } else { "FAIL" });
    }

    if worst <= tolerance {
        println!("all collapse deviations within tolerance {tolerance}");
        Ok(())
    } else {
        Err(CliError::ToleranceExceeded(format!(
            "worst collapse deviation {worst:.6} exceeds tolerance {tolerance}"
        )))
    }
}

pub fn cmd_predict(index_name: &str, grid_spec: &str) -> Result<(), CliError> {
    let kind = IndexKind::from_name(index_name)
        .ok_or_else(|| usage(format!("unknown index `{index_name}`")))?;
    let points = grid::parse_grid(grid_spec).map_err(usage)?;
    let mut out = String::new();
    use std::fmt::Write as _;
    for &r in &points {
        let prediction = dense_limit::predict(kind, r).map_err(|e| usage(e.to_string()))?;
        let _ = writeln!(out, "{r} {}", prediction.value);
    }
    print!("{out}");
    Ok(())
}
