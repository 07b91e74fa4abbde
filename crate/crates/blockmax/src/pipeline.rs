//! End-to-end analysis: describe, fit every family, test each fit, pick the
//! best family, and tabulate its return levels.

use blockmax_core::diagnostics::DEFAULT_ALPHA;
use blockmax_core::{
    anderson_darling, describe, fit_mle, return_level_table, select_best, CriticalValues,
    DescriptiveStats, Family, FitResult, GofResult, OptimizerConfig, ReturnLevelEntry,
    ReturnSpec, Sample,
};
use serde::{Deserialize, Serialize};

use crate::{Dataset, Error, Result};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub periods: ReturnSpec,
    pub alpha: f64,
    pub critical_values: CriticalValues,
    pub optimizer: OptimizerConfig,
    /// Families to fit, in [`Family::ALL`] order.
    pub families: Vec<Family>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            periods: ReturnSpec::default(),
            alpha: DEFAULT_ALPHA,
            critical_values: CriticalValues::default(),
            optimizer: OptimizerConfig::default(),
            families: Family::ALL.to_vec(),
        }
    }
}

/// A family's fit, or the reason it could not be fitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitEntry {
    pub family: Family,
    pub result: Option<FitResult>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofEntry {
    pub family: Family,
    pub result: Option<GofResult>,
    pub error: Option<String>,
}

/// Everything a run produces. Field names are the structured report schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub label: String,
    pub descriptive: DescriptiveStats,
    pub fits: Vec<FitEntry>,
    pub gof: Vec<GofEntry>,
    pub best_family: Family,
    /// Whether the best family passed its goodness-of-fit test.
    pub best_passed: bool,
    pub return_levels: Vec<ReturnLevelEntry>,
}

impl AnalysisReport {
    pub fn fit(&self, family: Family) -> Option<&FitResult> {
        self.fits.iter().find(|f| f.family == family)?.result.as_ref()
    }

    pub fn best_fit(&self) -> &FitResult {
        self.fit(self.best_family).expect("best family was fitted")
    }
}

/// Fits each family on its own thread; results keep the requested order.
pub fn fit_families(sample: &Sample, families: &[Family], cfg: &OptimizerConfig) -> Vec<FitEntry> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = families
            .iter()
            .map(|&family| (family, scope.spawn(move || fit_mle(family, sample, cfg))))
            .collect();
        handles
            .into_iter()
            .map(|(family, handle)| match handle.join().expect("fit thread panicked") {
                Ok(fit) => FitEntry { family, result: Some(fit), error: None },
                Err(e) => FitEntry { family, result: None, error: Some(e.to_string()) },
            })
            .collect()
    })
}

pub fn goodness_of_fit(
    sample: &Sample,
    fits: &[FitEntry],
    alpha: f64,
    table: &CriticalValues,
) -> Result<Vec<GofEntry>> {
    // an unknown alpha is a configuration problem, not a per-family one
    table.lookup(alpha)?;
    let mut rows = Vec::with_capacity(fits.len());
    for entry in fits {
        rows.push(match &entry.result {
            Some(fit) => GofEntry {
                family: entry.family,
                result: Some(anderson_darling(sample, &fit.params, alpha, table)?),
                error: None,
            },
            None => GofEntry { family: entry.family, result: None, error: entry.error.clone() },
        });
    }
    Ok(rows)
}

pub fn run_pipeline(ds: &Dataset, cfg: &PipelineConfig) -> Result<AnalysisReport> {
    let sample = &ds.sample;
    let descriptive = describe(sample)?;
    let fits = fit_families(sample, &cfg.families, &cfg.optimizer);
    let gof = goodness_of_fit(sample, &fits, cfg.alpha, &cfg.critical_values)?;

    let candidates: Vec<GofResult> = gof
        .iter()
        .zip(&fits)
        .filter(|(_, f)| f.result.as_ref().is_some_and(|r| r.converged))
        .filter_map(|(g, _)| g.result.clone())
        .collect();
    if candidates.is_empty() {
        return Err(Error::NoConvergedFit);
    }
    let best = select_best(&candidates)?;
    let best_params = fits
        .iter()
        .find(|f| f.family == best.family)
        .and_then(|f| f.result.as_ref())
        .map(|r| r.params)
        .expect("selected family has a fit");
    let return_levels = return_level_table(&best_params, &cfg.periods)?.entries;

    Ok(AnalysisReport {
        label: ds.label.clone(),
        descriptive,
        fits,
        gof,
        best_family: best.family,
        best_passed: best.passed,
        return_levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use blockmax_core::{sample, GevParams};

    fn dataset(n: usize, seed: u64) -> Dataset {
        let gev = GevParams::new(92.41, 30.85, 0.06).unwrap();
        Dataset::new("sim", None, sample(&gev, n, seed).unwrap()).unwrap()
    }

    #[test]
    fn report_shape() {
        let r = run_pipeline(&dataset(51, 3), &PipelineConfig::default()).unwrap();
        assert_eq!(r.fits.len(), 4);
        assert_eq!(r.gof.len(), 4);
        assert_eq!(r.return_levels.len(), 5);
        assert!(r.fit(r.best_family).is_some());
        for (f, g) in r.fits.iter().zip(&r.gof) {
            assert_eq!(f.family, g.family);
            let g = g.result.as_ref().unwrap();
            assert_eq!(g.critical_value, 2.502);
        }
    }

    #[test]
    fn unknown_alpha_is_rejected() {
        let cfg = PipelineConfig { alpha: 0.2, ..PipelineConfig::default() };
        assert!(matches!(
            run_pipeline(&dataset(51, 3), &cfg),
            Err(Error::Core(blockmax_core::Error::UnknownSignificanceLevel { .. }))
        ));
    }

    #[test]
    fn nothing_converges() {
        let mut cfg = PipelineConfig::default();
        cfg.optimizer.max_iterations = 1;
        let err = run_pipeline(&dataset(51, 3), &cfg).unwrap_err();
        assert!(matches!(err, Error::NoConvergedFit));
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn negative_values_skip_positive_families() {
        let gev = GevParams::new(0.0, 10.0, 0.1).unwrap();
        let ds = Dataset::new("neg", None, sample(&gev, 80, 4).unwrap()).unwrap();
        assert!(ds.sample.min() < 0.0);
        let r = run_pipeline(&ds, &PipelineConfig::default()).unwrap();
        assert!(r.fits[1].result.is_none() && r.fits[1].error.is_some());
        assert!(r.gof[2].result.is_none() && r.gof[2].error.is_some());
        assert!(matches!(r.best_family, Family::Gumbel | Family::Gev));
    }
}
