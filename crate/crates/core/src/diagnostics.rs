//! Descriptive statistics, the Anderson-Darling test, Q-Q and
//! probability-difference series, and best-family selection.

use alloc::vec::Vec;

use crate::dist::{ContinuousDist, Family};
use crate::math::{ln, sqrt};
use crate::{Error, Result, Sample};

/// Lower clamp applied to cdf values before taking logarithms.
pub const CDF_FLOOR: f64 = 1e-300;
/// Upper clamp applied to cdf values before taking logarithms.
pub const CDF_CEIL: f64 = 1.0 - 1e-16;

/// Default significance level and its critical value.
pub const DEFAULT_ALPHA: f64 = 0.05;
pub const DEFAULT_CRITICAL_VALUE: f64 = 2.502;

/// Summary statistics of a sample.
///
/// Variance uses the n − 1 denominator. Skewness is the adjusted
/// Fisher-Pearson coefficient and kurtosis the adjusted excess kurtosis
/// (the estimators spreadsheets call SKEW and KURT).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DescriptiveStats {
    pub n: usize,
    pub min: f64,
    pub max: f64,
    pub range: f64,
    pub mean: f64,
    pub variance: f64,
    pub std_dev: f64,
    /// 100·sd/mean; `None` when the mean is zero.
    pub coef_variation_pct: Option<f64>,
    pub std_error: f64,
    /// Needs n ≥ 3 and non-zero variance.
    pub skewness: Option<f64>,
    /// Needs n ≥ 4 and non-zero variance.
    pub excess_kurtosis: Option<f64>,
}

pub fn describe(sample: &Sample) -> Result<DescriptiveStats> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::TooFewObservations { needed: 2, got: n });
    }
    let nf = n as f64;
    let mean = sample.mean();
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for &x in sample.values() {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;

    let variance = m2 * nf / (nf - 1.0);
    let std_dev = sqrt(variance);
    let (min, max) = (sample.min(), sample.max());

    let skewness = (n >= 3 && m2 > 0.0).then(|| {
        let g1 = m3 / (m2 * sqrt(m2));
        g1 * sqrt(nf * (nf - 1.0)) / (nf - 2.0)
    });
    let excess_kurtosis = (n >= 4 && m2 > 0.0).then(|| {
        let g2 = m4 / (m2 * m2) - 3.0;
        ((nf + 1.0) * g2 + 6.0) * (nf - 1.0) / ((nf - 2.0) * (nf - 3.0))
    });

    Ok(DescriptiveStats {
        n,
        min,
        max,
        range: max - min,
        mean,
        variance,
        std_dev,
        coef_variation_pct: (mean != 0.0).then(|| 100.0 * std_dev / mean),
        std_error: std_dev / sqrt(nf),
        skewness,
        excess_kurtosis,
    })
}

/// Significance levels with known critical values for the A² statistic.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalValues {
    levels: Vec<(f64, f64)>,
}

impl Default for CriticalValues {
    /// Only α = 0.05 → 2.502. This is the case where the parameters are known
    /// in advance; applying it to fitted parameters is an approximation.
    fn default() -> Self {
        CriticalValues { levels: alloc::vec![(DEFAULT_ALPHA, DEFAULT_CRITICAL_VALUE)] }
    }
}

impl CriticalValues {
    pub fn empty() -> Self {
        CriticalValues { levels: Vec::new() }
    }

    /// Adds or replaces the critical value for `alpha`.
    pub fn with_level(mut self, alpha: f64, critical_value: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::OutOfDomain { what: "significance level", value: alpha });
        }
        if !(critical_value.is_finite() && critical_value > 0.0) {
            return Err(Error::OutOfDomain { what: "critical value", value: critical_value });
        }
        self.levels.retain(|(a, _)| !same_level(*a, alpha));
        self.levels.push((alpha, critical_value));
        Ok(self)
    }

    pub fn lookup(&self, alpha: f64) -> Result<f64> {
        self.levels
            .iter()
            .find(|(a, _)| same_level(*a, alpha))
            .map(|&(_, c)| c)
            .ok_or(Error::UnknownSignificanceLevel { alpha })
    }
}

fn same_level(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-12
}

/// Anderson-Darling result for one family.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GofResult {
    pub family: Family,
    pub statistic: f64,
    pub alpha: f64,
    pub critical_value: f64,
    pub pass: bool,
}

impl GofResult {
    pub fn new(family: Family, statistic: f64, alpha: f64, critical_value: f64) -> Self {
        GofResult { family, statistic, alpha, critical_value, pass: statistic < critical_value }
    }
}

/// A² = −n − (1/n) Σ (2i − 1)[ln F(x₍ᵢ₎) + ln(1 − F(x₍ₙ₋ᵢ₊₁₎))] over the
/// ascending order statistics, with F clamped to [`CDF_FLOOR`, `CDF_CEIL`].
pub fn anderson_darling_statistic<D: ContinuousDist + ?Sized>(sample: &Sample, dist: &D) -> f64 {
    let cdf: Vec<f64> = sample
        .sorted()
        .into_iter()
        .map(|x| dist.cdf(x).clamp(CDF_FLOOR, CDF_CEIL))
        .collect();
    let n = cdf.len();
    let sum: f64 = (0..n)
        .map(|i| (2 * i + 1) as f64 * (ln(cdf[i]) + ln(1.0 - cdf[n - 1 - i])))
        .sum();
    -(n as f64) - sum / n as f64
}

/// Runs the A² test for `params` at significance `alpha`.
pub fn anderson_darling(
    sample: &Sample,
    params: &crate::FamilyParams,
    alpha: f64,
    table: &CriticalValues,
) -> Result<GofResult> {
    let critical_value = table.lookup(alpha)?;
    let statistic = anderson_darling_statistic(sample, params);
    Ok(GofResult::new(params.family(), statistic, alpha, critical_value))
}

/// Plotting position i/(n + 1) for the i-th (1-based) of n order statistics.
pub fn plotting_position(i: usize, n: usize) -> f64 {
    i as f64 / (n + 1) as f64
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QqPoint {
    pub p: f64,
    pub theoretical: f64,
    pub observed: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QqSeries {
    pub family: Family,
    pub points: Vec<QqPoint>,
}

/// Fitted quantiles at i/(n + 1) against the ascending observations.
pub fn qq_series(sample: &Sample, params: &crate::FamilyParams) -> QqSeries {
    let sorted = sample.sorted();
    let n = sorted.len();
    let points = sorted
        .into_iter()
        .enumerate()
        .map(|(i, observed)| {
            let p = plotting_position(i + 1, n);
            QqPoint { p, theoretical: params.quantile_unchecked(p), observed }
        })
        .collect();
    QqSeries { family: params.family(), points }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiffPoint {
    pub x: f64,
    pub diff: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiffSeries {
    pub family: Family,
    pub points: Vec<DiffPoint>,
}

/// Empirical minus fitted cdf at each ascending observation, using the
/// i/(n + 1) plotting position as the empirical value.
pub fn probability_difference(sample: &Sample, params: &crate::FamilyParams) -> DiffSeries {
    let sorted = sample.sorted();
    let n = sorted.len();
    let points = sorted
        .into_iter()
        .enumerate()
        .map(|(i, x)| DiffPoint { x, diff: plotting_position(i + 1, n) - params.cdf(x) })
        .collect();
    DiffSeries { family: params.family(), points }
}

/// The chosen family and whether it passed its test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Selection {
    pub family: Family,
    pub passed: bool,
}

/// Smallest A² among passing results; if none pass, smallest A² overall
/// with `passed = false`. Ties go to the earlier family in [`Family::ALL`].
pub fn select_best(gofs: &[GofResult]) -> Result<Selection> {
    let rank = |g: &&GofResult| {
        let s = if g.statistic.is_nan() { f64::INFINITY } else { g.statistic };
        (s, g.family.order())
    };
    let min_by_rank = |a: &&GofResult, b: &&GofResult| {
        let (sa, oa) = rank(a);
        let (sb, ob) = rank(b);
        sa.total_cmp(&sb).then(oa.cmp(&ob))
    };
    if gofs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let best = gofs
        .iter()
        .filter(|g| g.pass)
        .min_by(min_by_rank)
        .or_else(|| gofs.iter().min_by(min_by_rank))
        .expect("non-empty");
    Ok(Selection { family: best.family, passed: best.pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{FamilyParams, GumbelParams};
    use alloc::vec;

    #[test]
    fn describe_symmetric_triple() {
        let d = describe(&Sample::new(vec![1.0, 2.0, 3.0]).unwrap()).unwrap();
        assert_eq!(d.mean, 2.0);
        assert_eq!(d.variance, 1.0);
        assert_eq!(d.skewness, Some(0.0));
        assert_eq!(d.excess_kurtosis, None);
        assert_eq!(d.range, 2.0);
    }

    #[test]
    fn describe_needs_two() {
        assert!(describe(&Sample::new(vec![1.0]).unwrap()).is_err());
        let d = describe(&Sample::new(vec![4.0, 4.0, 4.0, 4.0]).unwrap()).unwrap();
        assert_eq!(d.skewness, None);
        assert_eq!(d.std_dev, 0.0);
    }

    #[test]
    fn describe_known_moments() {
        // Checked against scipy.stats.skew/kurtosis with bias=False.
        let s = Sample::new(vec![2.0, 8.0, 0.0, 4.0, 1.0, 9.0, 9.0, 0.0]).unwrap();
        let d = describe(&s).unwrap();
        assert!((d.skewness.unwrap() - 0.330_582_180_407_974_6).abs() < 1e-12);
        assert!((d.excess_kurtosis.unwrap() - (-2.098_602_258_096_087)).abs() < 1e-12);
    }

    #[test]
    fn table_one_identities() {
        // sd 41.07, mean 112.09, n 51
        let se = 41.07 / 51f64.sqrt();
        assert!((se - 5.75).abs() < 0.005);
        let cv = 100.0 * 41.07 / 112.09;
        assert!((36.625..36.645).contains(&cv));
    }

    #[test]
    fn critical_value_table() {
        let t = CriticalValues::default();
        assert_eq!(t.lookup(0.05).unwrap(), 2.502);
        assert!(matches!(t.lookup(0.01), Err(Error::UnknownSignificanceLevel { .. })));
        let t = t.with_level(0.01, 3.857).unwrap();
        assert_eq!(t.lookup(0.01).unwrap(), 3.857);
        assert!(CriticalValues::empty().with_level(1.5, 1.0).is_err());
    }

    #[test]
    fn gate_from_table_three() {
        let g = GofResult::new(Family::Gev, 0.333, 0.05, 2.502);
        assert!(g.pass);
        assert!(!GofResult::new(Family::Gev, 2.502, 0.05, 2.502).pass);
    }

    #[test]
    fn qq_single_point() {
        let g: FamilyParams = GumbelParams::new(10.0, 2.0).unwrap().into();
        let s = Sample::new(vec![7.0]).unwrap();
        let q = qq_series(&s, &g);
        assert_eq!(q.points.len(), 1);
        let expected = 10.0 - 2.0 * (2f64.ln()).ln();
        assert!((q.points[0].theoretical - expected).abs() < 1e-12);
        assert_eq!(q.points[0].observed, 7.0);
        assert_eq!(q.points[0].p, 0.5);
    }

    #[test]
    fn difference_at_median() {
        let g: FamilyParams = GumbelParams::new(10.0, 2.0).unwrap().into();
        let median = g.quantile(0.5).unwrap();
        let d = probability_difference(&Sample::new(vec![median]).unwrap(), &g);
        assert!(d.points[0].diff.abs() < 1e-12);
    }

    #[test]
    fn selection_rules() {
        let rows = [
            GofResult::new(Family::Gumbel, 0.381, 0.05, 2.502),
            GofResult::new(Family::Frechet, 0.844, 0.05, 2.502),
            GofResult::new(Family::Weibull, 1.405, 0.05, 2.502),
            GofResult::new(Family::Gev, 0.333, 0.05, 2.502),
        ];
        assert_eq!(select_best(&rows).unwrap(), Selection { family: Family::Gev, passed: true });

        let failing = [GofResult::new(Family::Weibull, 9.0, 0.05, 2.502)];
        assert_eq!(
            select_best(&failing).unwrap(),
            Selection { family: Family::Weibull, passed: false }
        );

        let tied = [
            GofResult::new(Family::Gev, 0.5, 0.05, 2.502),
            GofResult::new(Family::Frechet, 0.5, 0.05, 2.502),
        ];
        assert_eq!(select_best(&tied).unwrap().family, Family::Frechet);

        // a passing row beats a smaller failing one
        let mixed = [
            GofResult::new(Family::Gumbel, 1.0, 0.05, 0.5),
            GofResult::new(Family::Gev, 2.0, 0.05, 2.502),
        ];
        assert_eq!(select_best(&mixed).unwrap().family, Family::Gev);
        assert_eq!(select_best(&[]), Err(Error::EmptyInput));
    }
}
