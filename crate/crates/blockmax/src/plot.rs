//! Plot-data emission. One comma-delimited file per series:
//!
//! | file                 | header                   |
//! |----------------------|--------------------------|
//! | `series.csv`         | `year,value`             |
//! | `pdf_<family>.csv`   | `x,pdf`                  |
//! | `qq_<family>.csv`    | `p,theoretical,observed` |
//! | `diff_<family>.csv`  | `x,diff`                 |
//! | `return_curve.csv`   | `period,level`           |
//!
//! Per-family files exist only for families that were fitted. When the
//! dataset has no years, `series.csv` numbers the observations from 1.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use blockmax_core::{probability_difference, qq_series, return_curve, ContinuousDist};

use crate::{write_atomic, AnalysisReport, Dataset, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PlotOptions {
    pub grid_points: usize,
    /// Density grid spans [min − padding·range, max + padding·range].
    pub padding: f64,
    pub curve_min_period: f64,
    pub curve_max_period: f64,
    pub curve_points: usize,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            grid_points: 512,
            padding: 0.1,
            curve_min_period: 1.1,
            curve_max_period: 1000.0,
            curve_points: 200,
        }
    }
}

/// Writes all plot-data files into `out_dir` (created if missing) and
/// returns their paths in write order.
pub fn emit_plot_data(
    report: &AnalysisReport,
    ds: &Dataset,
    out_dir: &Path,
    opts: &PlotOptions,
) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    let mut emit = |name: String, body: String| -> Result<()> {
        let path = out_dir.join(name);
        write_atomic(&path, body.as_bytes())?;
        written.push(path);
        Ok(())
    };

    let mut body = String::from("year,value\n");
    for (i, v) in ds.sample.values().iter().enumerate() {
        let year = ds.years.as_ref().map_or(i as i64 + 1, |y| y[i]);
        let _ = writeln!(body, "{year},{v}");
    }
    emit("series.csv".into(), body)?;

    let (lo, hi) = (ds.sample.min(), ds.sample.max());
    let pad = opts.padding * (hi - lo);
    let grid = density_grid(lo - pad, hi + pad, opts.grid_points);

    for entry in &report.fits {
        let Some(fit) = &entry.result else { continue };
        let name = entry.family.name();
        let params = &fit.params;

        let mut body = String::from("x,pdf\n");
        for &x in &grid {
            let _ = writeln!(body, "{x},{}", params.pdf(x));
        }
        emit(format!("pdf_{name}.csv"), body)?;

        let mut body = String::from("p,theoretical,observed\n");
        for p in qq_series(&ds.sample, params).points {
            let _ = writeln!(body, "{},{},{}", p.p, p.theoretical, p.observed);
        }
        emit(format!("qq_{name}.csv"), body)?;

        let mut body = String::from("x,diff\n");
        for p in probability_difference(&ds.sample, params).points {
            let _ = writeln!(body, "{},{}", p.x, p.diff);
        }
        emit(format!("diff_{name}.csv"), body)?;
    }

    let max_period = report
        .return_levels
        .last()
        .map_or(opts.curve_max_period, |e| e.period.max(opts.curve_max_period));
    let curve = return_curve(
        &report.best_fit().params,
        opts.curve_min_period,
        max_period,
        opts.curve_points,
    )?;
    let mut body = String::from("period,level\n");
    for e in curve {
        let _ = writeln!(body, "{},{}", e.period, e.level);
    }
    emit("return_curve.csv".into(), body)?;

    Ok(written)
}

fn density_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .collect(),
    }
}
