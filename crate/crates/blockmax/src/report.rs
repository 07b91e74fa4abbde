//! Report rendering: text tables or a JSON document.
//!
//! JSON top-level keys: `label`, `descriptive`, `fits`, `gof`,
//! `best_family`, `best_passed`, `return_levels`. Numbers are written at full
//! precision and parse back to the same report.

use std::fmt::Write;
use std::str::FromStr;

use blockmax_core::{FamilyParams, FitResult};

use crate::pipeline::{AnalysisReport, FitEntry, GofEntry};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn emit_report(report: &AnalysisReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Text => Ok(render_text(report)),
    }
}

pub fn parse_report(json: &str) -> Result<AnalysisReport> {
    Ok(serde_json::from_str(json)?)
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "---".to_string(), |v| format!("{v:.2}"))
}

/// Location, scale and shape columns ("---" where a family has none).
fn param_columns(p: &FamilyParams) -> [Option<f64>; 3] {
    match p {
        FamilyParams::Gumbel(g) => [Some(g.location()), Some(g.scale()), None],
        FamilyParams::Frechet(f) => [Some(f.location()), Some(f.scale()), Some(f.shape())],
        FamilyParams::Weibull(w) => [None, Some(w.scale()), Some(w.shape())],
        FamilyParams::Gev(g) => [Some(g.location()), Some(g.scale()), Some(g.shape())],
    }
}

pub fn render_fit_table(out: &mut String, fits: &[FitEntry]) {
    let _ = writeln!(
        out,
        "{:<10}{:>12}{:>12}{:>12}{:>14}{:>11}",
        "Family", "Location", "Scale", "Shape", "LogLik", "Converged"
    );
    for entry in fits {
        match &entry.result {
            Some(FitResult { params, log_likelihood, converged, .. }) => {
                let [loc, scale, shape] = param_columns(params);
                let _ = writeln!(
                    out,
                    "{:<10}{:>12}{:>12}{:>12}{:>14.2}{:>11}",
                    entry.family.name(),
                    opt(loc),
                    opt(scale),
                    opt(shape),
                    log_likelihood,
                    if *converged { "yes" } else { "no" }
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<10}ERROR: {}",
                    entry.family.name(),
                    entry.error.as_deref().unwrap_or("not fitted")
                );
            }
        }
    }
}

pub fn render_gof_table(out: &mut String, gof: &[GofEntry]) {
    let _ = writeln!(out, "{:<10}{:>12}{:>12}{:>8}", "Family", "Statistic", "Crit. Val.", "Result");
    for entry in gof {
        match &entry.result {
            Some(g) => {
                let _ = writeln!(
                    out,
                    "{:<10}{:>12.3}{:>12.3}{:>8}",
                    entry.family.name(),
                    g.statistic,
                    g.critical_value,
                    if g.pass { "PASS" } else { "FAIL" }
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<10}{:>12}{:>12}{:>8}  {}",
                    entry.family.name(),
                    "---",
                    "---",
                    "ERROR",
                    entry.error.as_deref().unwrap_or("")
                );
            }
        }
    }
}

pub fn render_return_levels(out: &mut String, rows: &[blockmax_core::ReturnLevelEntry]) {
    let _ = writeln!(out, "{:<10}{:>14}", "Period", "Level");
    for e in rows {
        let _ = writeln!(out, "{:<10}{:>14.2}", e.period, e.level);
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let d = &r.descriptive;
    let mut out = String::new();
    let _ = writeln!(out, "Dataset: {} (n = {})\n", r.label, d.n);

    let _ = writeln!(out, "Descriptive statistics");
    let rows: [(&str, String); 9] = [
        ("Sample size", d.n.to_string()),
        ("Range", format!("{:.2}", d.range)),
        ("Mean", format!("{:.2}", d.mean)),
        ("Variance", format!("{:.2}", d.variance)),
        ("Standard deviation", format!("{:.2}", d.std_dev)),
        ("Coefficient of variation (%)", opt(d.coef_variation_pct)),
        ("Standard error", format!("{:.2}", d.std_error)),
        ("Skewness", opt(d.skewness)),
        ("Kurtosis (excess)", opt(d.excess_kurtosis)),
    ];
    for (name, value) in rows {
        let _ = writeln!(out, "{name:<30}{value:>12}");
    }

    let _ = writeln!(out, "\nFitted parameters (maximum likelihood)");
    render_fit_table(&mut out, &r.fits);

    let alpha = r.gof.iter().find_map(|g| g.result.as_ref()).map(|g| g.alpha);
    let _ = writeln!(out, "\nAnderson-Darling goodness of fit (alpha = {})", opt(alpha));
    render_gof_table(&mut out, &r.gof);

    let _ = writeln!(
        out,
        "\nBest family: {}{}",
        r.best_family,
        if r.best_passed { "" } else { " (no family passed)" }
    );
    let _ = writeln!(out, "\nReturn levels ({})", r.best_family);
    render_return_levels(&mut out, &r.return_levels);
    out
}
