//! Return levels: the level exceeded on average once every P blocks.

use alloc::vec::Vec;

use crate::dist::{ContinuousDist, FamilyParams, GevParams, GUMBEL_LIMIT};
use crate::math::{ln, powf};
use crate::{Error, Result};

/// Periods used when none are given.
pub const DEFAULT_PERIODS: [f64; 5] = [5.0, 10.0, 50.0, 100.0, 200.0];

/// Return periods, strictly increasing and all greater than one.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnSpec {
    periods: Vec<f64>,
}

impl ReturnSpec {
    pub fn new(periods: Vec<f64>) -> Result<Self> {
        let valid = !periods.is_empty()
            && periods.iter().all(|&p| p.is_finite() && p > 1.0)
            && periods.windows(2).all(|w| w[0] < w[1]);
        if valid {
            Ok(ReturnSpec { periods })
        } else {
            Err(Error::InvalidPeriods)
        }
    }

    pub fn periods(&self) -> &[f64] {
        &self.periods
    }
}

impl Default for ReturnSpec {
    fn default() -> Self {
        ReturnSpec { periods: DEFAULT_PERIODS.to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReturnLevelEntry {
    pub period: f64,
    pub level: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReturnLevelTable {
    pub entries: Vec<ReturnLevelEntry>,
}

fn check_period(period: f64) -> Result<()> {
    if period.is_finite() && period > 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain { what: "return period", value: period })
    }
}

/// Quantile at non-exceedance probability 1 − 1/P.
pub fn return_level(params: &FamilyParams, period: f64) -> Result<f64> {
    check_period(period)?;
    Ok(params.quantile_unchecked(1.0 - 1.0 / period))
}

/// x = μ − (σ/k)[1 − (−ln(1 − 1/P))^(−k)], evaluated as written.
///
/// Kept separate from [`return_level`] so the two routes can be compared.
/// For |k| below the Gumbel threshold it returns μ − σ·ln(−ln(1 − 1/P)).
pub fn gev_return_level_closed_form(params: &GevParams, period: f64) -> Result<f64> {
    check_period(period)?;
    let (mu, sigma, k) = (params.location(), params.scale(), params.shape());
    let y = -ln(1.0 - 1.0 / period);
    if k.abs() < GUMBEL_LIMIT {
        Ok(mu - sigma * ln(y))
    } else {
        Ok(mu - sigma / k * (1.0 - powf(y, -k)))
    }
}

pub fn return_level_table(params: &FamilyParams, spec: &ReturnSpec) -> Result<ReturnLevelTable> {
    let entries = spec
        .periods()
        .iter()
        .map(|&period| Ok(ReturnLevelEntry { period, level: return_level(params, period)? }))
        .collect::<Result<_>>()?;
    Ok(ReturnLevelTable { entries })
}

/// `points` log-spaced periods from `min_period` to `max_period` inclusive,
/// with their return levels.
pub fn return_curve(
    params: &FamilyParams,
    min_period: f64,
    max_period: f64,
    points: usize,
) -> Result<Vec<ReturnLevelEntry>> {
    check_period(min_period)?;
    check_period(max_period)?;
    if min_period >= max_period {
        return Err(Error::InvalidPeriods);
    }
    if points < 2 {
        return Err(Error::OutOfDomain { what: "curve points", value: points as f64 });
    }
    let ratio = max_period / min_period;
    (0..points)
        .map(|i| {
            let period = if i + 1 == points {
                max_period
            } else {
                min_period * powf(ratio, i as f64 / (points - 1) as f64)
            };
            Ok(ReturnLevelEntry { period, level: return_level(params, period)? })
        })
        .collect()
}
