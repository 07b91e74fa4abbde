// Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use blockmax_core::{
    ContinuousDist, FamilyParams, FrechetParams, GevParams, GumbelParams, WeibullParams,
};

pub fn table_params() -> [FamilyParams; 4] {
    [
        GumbelParams::new(93.61, 32.02).unwrap().into(),
        FrechetParams::new(3.37, 88.16).unwrap().into(),
        WeibullParams::new(3.34, 122.27).unwrap().into(),
        GevParams::new(92.41, 30.85, 0.06).unwrap().into(),
    ]
}

pub fn table_gev() -> FamilyParams {
    GevParams::new(92.41, 30.85, 0.06).unwrap().into()
}

/// Solves cdf(x) = p by bisection on [lo, hi].
pub fn bisect_quantile<D: ContinuousDist>(d: &D, p: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if d.cdf(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Composite Simpson rule with `panels` (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut s = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}
