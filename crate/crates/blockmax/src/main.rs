use std::path::PathBuf;
use std::process::ExitCode;

use blockmax::pipeline::{fit_families, goodness_of_fit};
use blockmax::report::{render_fit_table, render_gof_table, render_return_levels};
use blockmax::{
    emit_plot_data, emit_report, load_csv, run_pipeline, simulate_to_file, ColumnSpec, Error,
    Format, PipelineConfig, PlotOptions, Result,
};
use blockmax_core::diagnostics::{DEFAULT_ALPHA, DEFAULT_CRITICAL_VALUE};
use blockmax_core::return_level::DEFAULT_PERIODS;
use blockmax_core::{return_level_table, CriticalValues, Family, OptimizerConfig, ReturnSpec};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Block-maxima extreme value analysis.
#[derive(Parser)]
#[command(name = "blockmax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit one or all families by maximum likelihood.
    Fit(CommonArgs),
    /// Fit and run the Anderson-Darling test.
    Gof(GofArgs),
    /// Return levels for one family, or for the best family with `--dist all`.
    ReturnLevels(ReturnArgs),
    /// Full pipeline: statistics, fits, tests, selection, return levels.
    Report(ReportArgs),
    /// Draw a seeded sample and write it as one value per line.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input CSV: one value per line, or year,value; optional header.
    #[arg(long)]
    input: PathBuf,
    /// gumbel, frechet, weibull, gev or all.
    #[arg(long, default_value = "all")]
    dist: String,
    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long, default_value_t = 10_000)]
    max_iterations: usize,
}

#[derive(Args)]
struct GofArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Critical value for a non-default `--alpha`.
    #[arg(long)]
    critical_value: Option<f64>,
}

#[derive(Args)]
struct ReturnArgs {
    #[command(flatten)]
    gof: GofArgs,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PERIODS)]
    periods: Vec<f64>,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    levels: ReturnArgs,
    /// Directory for plot-data CSV files.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    dist: String,
    /// gumbel: location,scale; frechet: shape,scale[,location];
    /// weibull: shape,scale; gev: location,scale,shape.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    params: Vec<f64>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    output: PathBuf,
}

fn families(dist: &str) -> Result<Vec<Family>> {
    if dist.eq_ignore_ascii_case("all") {
        return Ok(Family::ALL.to_vec());
    }
    dist.parse::<Family>()
        .map(|f| vec![f])
        .map_err(|_| Error::Usage(format!("unknown --dist {dist:?}")))
}

fn usage<T>(r: std::result::Result<T, blockmax_core::Error>) -> Result<T> {
    r.map_err(|e| Error::Usage(e.to_string()))
}

fn pipeline_config(args: &ReturnArgs) -> Result<PipelineConfig> {
    let gof = &args.gof;
    let mut table = CriticalValues::default();
    if let Some(c) = gof.critical_value {
        table = usage(table.with_level(gof.alpha, c))?;
    } else if (gof.alpha - DEFAULT_ALPHA).abs() > 1e-12 {
        return Err(Error::Usage(format!(
            "no built-in critical value for alpha {}; pass --critical-value (default {} at {})",
            gof.alpha, DEFAULT_CRITICAL_VALUE, DEFAULT_ALPHA
        )));
    }
    Ok(PipelineConfig {
        periods: usage(ReturnSpec::new(args.periods.clone()))?,
        alpha: gof.alpha,
        critical_values: table,
        optimizer: OptimizerConfig {
            max_iterations: gof.common.max_iterations,
            ..OptimizerConfig::default()
        },
        families: families(&gof.common.dist)?,
    })
}

fn no_converged(fits: &[blockmax::FitEntry]) -> bool {
    !fits.iter().any(|f| f.result.as_ref().is_some_and(|r| r.converged))
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Fit(args) => {
            let format: Format = args.format.parse()?;
            let ds = load_csv(&args.input, ColumnSpec::Auto)?;
            let cfg = OptimizerConfig { max_iterations: args.max_iterations, ..Default::default() };
            let fits = fit_families(&ds.sample, &families(&args.dist)?, &cfg);
            if no_converged(&fits) {
                return Err(Error::NoConvergedFit);
            }
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&json!({ "fits": fits }))? + "\n",
                Format::Text => {
                    let mut out = String::new();
                    render_fit_table(&mut out, &fits);
                    out
                }
            })
        }
        Command::Gof(args) => {
            let levels = ReturnArgs { gof: args, periods: DEFAULT_PERIODS.to_vec() };
            let cfg = pipeline_config(&levels)?;
            let common = &levels.gof.common;
            let format: Format = common.format.parse()?;
            let ds = load_csv(&common.input, ColumnSpec::Auto)?;
            let fits = fit_families(&ds.sample, &cfg.families, &cfg.optimizer);
            if no_converged(&fits) {
                return Err(Error::NoConvergedFit);
            }
            let gof = goodness_of_fit(&ds.sample, &fits, cfg.alpha, &cfg.critical_values)?;
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&json!({ "gof": gof }))? + "\n",
                Format::Text => {
                    let mut out = String::new();
                    render_gof_table(&mut out, &gof);
                    out
                }
            })
        }
        Command::ReturnLevels(args) => {
            let cfg = pipeline_config(&args)?;
            let format: Format = args.gof.common.format.parse()?;
            let ds = load_csv(&args.gof.common.input, ColumnSpec::Auto)?;
            let (family, rows) = if cfg.families.len() == 1 {
                let fits = fit_families(&ds.sample, &cfg.families, &cfg.optimizer);
                let entry = &fits[0];
                let fit = match &entry.result {
                    Some(fit) if fit.converged => fit,
                    Some(_) => return Err(Error::NoConvergedFit),
                    None => {
                        return Err(Error::Usage(entry.error.clone().unwrap_or_default()))
                    }
                };
                (entry.family, return_level_table(&fit.params, &cfg.periods)?.entries)
            } else {
                let report = run_pipeline(&ds, &cfg)?;
                (report.best_family, report.return_levels)
            };
            Ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "family": family,
                        "return_levels": rows,
                    }))? + "\n"
                }
                Format::Text => {
                    let mut out = format!("Return levels ({family})\n");
                    render_return_levels(&mut out, &rows);
                    out
                }
            })
        }
        Command::Report(args) => {
            let cfg = pipeline_config(&args.levels)?;
            let format: Format = args.levels.gof.common.format.parse()?;
            let ds = load_csv(&args.levels.gof.common.input, ColumnSpec::Auto)?;
            let report = run_pipeline(&ds, &cfg)?;
            if let Some(dir) = &args.out_dir {
                emit_plot_data(&report, &ds, dir, &PlotOptions::default())?;
            }
            emit_report(&report, format)
        }
        Command::Simulate(args) => {
            let family = args
                .dist
                .parse::<Family>()
                .map_err(|_| Error::Usage(format!("unknown --dist {:?}", args.dist)))?;
            let params = usage(family.params_from_slice(&args.params))?;
            simulate_to_file(&params, args.n, args.seed, &args.output)?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
