//! Block-maxima extreme value analysis.
//!
//! This crate holds the numerical core: the Gumbel, Fréchet, Weibull and
//! generalized extreme value (GEV) families ([`dist`]), maximum likelihood
//! fitting with a Nelder-Mead simplex ([`fit`]), descriptive statistics and
//! Anderson-Darling goodness of fit ([`diagnostics`]), and return levels
//! ([`mod@return_level`]).
//!
//! It is `no_std` and only needs `alloc`. File formats and the command line
//! live in the `blockmax` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod diagnostics;
pub mod dist;
mod error;
pub mod fit;
pub(crate) mod math;
pub mod return_level;
mod sample;

pub use diagnostics::{
    anderson_darling, anderson_darling_statistic, describe, probability_difference, qq_series, select_best, CriticalValues,
    DescriptiveStats, DiffPoint, DiffSeries, GofResult, QqPoint, QqSeries, Selection,
};
pub use dist::{
    sample, ContinuousDist, Family, FamilyParams, FrechetParams, GevParams, GumbelParams,
    Support, WeibullParams,
};
pub use error::Error;
pub use fit::{
    fit_all, fit_mle, initial_params, log_likelihood, FamilyFit, FitResult, OptimizerConfig,
};
pub use return_level::{
    gev_return_level_closed_form, return_curve, return_level, return_level_table, ReturnLevelEntry,
    ReturnLevelTable, ReturnSpec,
};
pub use sample::Sample;

pub type Result<T> = core::result::Result<T, Error>;
