//! Maximum likelihood fitting.
//!
//! Each family is fitted by minimizing the negative log-likelihood with a
//! Nelder-Mead simplex in transformed coordinates: scales and positive shapes
//! are searched on a log scale, locations and the GEV shape directly. Points
//! outside the data's support get an infinite objective.

use alloc::vec;
use alloc::vec::Vec;

use crate::dist::{
    ContinuousDist, Family, FamilyParams, FrechetParams, GevParams, GumbelParams, WeibullParams,
};
use crate::math::{exp, ln, sqrt, EULER_GAMMA};
use crate::{Error, Result, Sample};

mod simplex;

/// Starting shape for GEV fits; kept off zero so the simplex does not begin
/// on the Gumbel ridge.
pub const GEV_INITIAL_SHAPE: f64 = 0.1;

/// Minimum sample size accepted by [`fit_mle`].
pub const MIN_FIT_SIZE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OptimizerConfig {
    pub max_iterations: usize,
    pub function_tolerance: f64,
    pub parameter_tolerance: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig { max_iterations: 10_000, function_tolerance: 1e-8, parameter_tolerance: 1e-8 }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig { name: "max_iterations" });
        }
        if !is_positive(self.function_tolerance) {
            return Err(Error::InvalidConfig { name: "function_tolerance" });
        }
        if !is_positive(self.parameter_tolerance) {
            return Err(Error::InvalidConfig { name: "parameter_tolerance" });
        }
        Ok(())
    }
}

fn is_positive(x: f64) -> bool {
    x > 0.0
}

/// Outcome of a maximum likelihood fit.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FitResult {
    pub params: FamilyParams,
    /// Maximized log-likelihood.
    pub log_likelihood: f64,
    pub converged: bool,
    pub iterations: usize,
    pub initial_params: FamilyParams,
}

impl FitResult {
    pub fn family(&self) -> Family {
        self.params.family()
    }
}

/// One entry of [`fit_all`].
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyFit {
    pub family: Family,
    pub outcome: Result<FitResult>,
}

/// Sum of log densities; `-∞` when any observation is outside the support.
pub fn log_likelihood<D: ContinuousDist + ?Sized>(dist: &D, sample: &Sample) -> f64 {
    let mut total = 0.0;
    for &x in sample.values() {
        let l = dist.ln_pdf(x);
        if l == f64::NEG_INFINITY || l.is_nan() {
            return f64::NEG_INFINITY;
        }
        total += l;
    }
    total
}

/// Moment-matched (location, scale) of a Gumbel with the given mean and sd.
fn gumbel_moments(mean: f64, sd: f64) -> (f64, f64) {
    let scale = sd * sqrt(6.0) / core::f64::consts::PI;
    (mean - EULER_GAMMA * scale, scale)
}

fn positive_logs(family: Family, sample: &Sample) -> Result<Sample> {
    if let Some(&value) = sample.values().iter().find(|&&x| x <= 0.0) {
        return Err(Error::OutsideSupport { family, value });
    }
    Sample::new(sample.values().iter().map(|&x| ln(x)).collect())
}

/// Deterministic starting parameters.
///
/// * Gumbel: moment matching, scale = sd·√6/π, location = mean − γ·scale.
/// * GEV: the Gumbel start with shape [`GEV_INITIAL_SHAPE`].
/// * Fréchet: ln X is Gumbel(ln scale, 1/shape); moment matching on the logs.
/// * Weibull: ln X is a minimum-type Gumbel(ln scale, 1/shape); same idea.
pub fn initial_params(family: Family, sample: &Sample) -> Result<FamilyParams> {
    if sample.len() < 2 {
        return Err(Error::TooFewObservations { needed: 2, got: sample.len() });
    }
    let sd = sample.std_dev();
    if sd <= 0.0 {
        return Err(Error::DegenerateSample);
    }
    let mean = sample.mean();
    Ok(match family {
        Family::Gumbel => {
            let (loc, scale) = gumbel_moments(mean, sd);
            GumbelParams::new(loc, scale)?.into()
        }
        Family::Gev => {
            let (loc, scale) = gumbel_moments(mean, sd);
            GevParams::new(loc, scale, GEV_INITIAL_SHAPE)?.into()
        }
        Family::Frechet => {
            let logs = positive_logs(family, sample)?;
            let (loc, scale) = gumbel_moments(logs.mean(), logs.std_dev());
            FrechetParams::new(1.0 / scale, exp(loc))?.into()
        }
        Family::Weibull => {
            let logs = positive_logs(family, sample)?;
            let (_, scale) = gumbel_moments(logs.mean(), logs.std_dev());
            let shape = 1.0 / scale;
            WeibullParams::new(shape, exp(logs.mean() + EULER_GAMMA * scale))?.into()
        }
    })
}

/// Search coordinates for a parameter record.
fn to_coords(params: &FamilyParams) -> Vec<f64> {
    match *params {
        FamilyParams::Gumbel(p) => vec![p.location(), ln(p.scale())],
        FamilyParams::Frechet(p) => vec![ln(p.shape()), ln(p.scale())],
        FamilyParams::Weibull(p) => vec![ln(p.shape()), ln(p.scale())],
        FamilyParams::Gev(p) => vec![p.location(), ln(p.scale()), p.shape()],
    }
}

fn from_coords(family: Family, c: &[f64]) -> Option<FamilyParams> {
    let params: FamilyParams = match family {
        Family::Gumbel => GumbelParams::new(c[0], exp(c[1])).ok()?.into(),
        Family::Frechet => FrechetParams::new(exp(c[0]), exp(c[1])).ok()?.into(),
        Family::Weibull => WeibullParams::new(exp(c[0]), exp(c[1])).ok()?.into(),
        Family::Gev => GevParams::new(c[0], exp(c[1]), c[2]).ok()?.into(),
    };
    Some(params)
}

/// Initial simplex edge lengths in search coordinates.
fn initial_steps(params: &FamilyParams) -> Vec<f64> {
    match *params {
        FamilyParams::Gumbel(p) => vec![0.1 * p.scale(), 0.1],
        FamilyParams::Frechet(_) | FamilyParams::Weibull(_) => vec![0.1, 0.1],
        FamilyParams::Gev(p) => vec![0.1 * p.scale(), 0.1, 0.05],
    }
}

/// Fits `family` to `sample` by maximum likelihood.
///
/// A fit that runs out of iterations is returned with `converged = false`
/// rather than as an error.
pub fn fit_mle(family: Family, sample: &Sample, cfg: &OptimizerConfig) -> Result<FitResult> {
    cfg.validate()?;
    if sample.len() < MIN_FIT_SIZE {
        return Err(Error::TooFewObservations { needed: MIN_FIT_SIZE, got: sample.len() });
    }
    let initial = initial_params(family, sample)?;
    let start_ll = log_likelihood(&initial, sample);
    if !start_ll.is_finite() {
        return Err(Error::InfeasibleStart { family });
    }

    let objective = |c: &[f64]| match from_coords(family, c) {
        Some(p) => -log_likelihood(&p, sample),
        None => f64::INFINITY,
    };
    let min = simplex::minimize(objective, &to_coords(&initial), &initial_steps(&initial), cfg);

    let (params, log_likelihood) = match from_coords(family, &min.point) {
        Some(p) if -min.value >= start_ll => (p, -min.value),
        _ => (initial, start_ll),
    };
    Ok(FitResult {
        params,
        log_likelihood,
        converged: min.converged && log_likelihood.is_finite(),
        iterations: min.iterations,
        initial_params: initial,
    })
}

/// Fits all four families independently, in [`Family::ALL`] order.
pub fn fit_all(sample: &Sample, cfg: &OptimizerConfig) -> Vec<FamilyFit> {
    Family::ALL
        .iter()
        .map(|&family| FamilyFit { family, outcome: fit_mle(family, sample, cfg) })
        .collect()
}
