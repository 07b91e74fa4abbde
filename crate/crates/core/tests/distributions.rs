mod common;

use blockmax_core::{sample, ContinuousDist, FamilyParams, GevParams, GumbelParams};
use common::{bisect_quantile, simpson, table_gev, table_params};
use proptest::prelude::*;

/// A range holding all but a negligible tail of mass for each fixture.
fn span(d: &FamilyParams) -> (f64, f64) {
    let s = d.support();
    let lo = d.quantile(1e-12).unwrap().max(s.lower);
    let hi = d.quantile(1.0 - 1e-12).unwrap();
    (lo, hi)
}

#[test]
fn support_intervals() {
    let [gumbel, _, _, gev] = table_params();
    assert_eq!(gumbel.support().lower, f64::NEG_INFINITY);
    assert_eq!(gumbel.support().upper, f64::INFINITY);
    assert!((gev.support().lower - (-421.76)).abs() < 0.005);
}

#[test]
fn cdf_monotone_on_grid() {
    for d in table_params() {
        let (lo, hi) = span(&d);
        let mut prev = 0.0;
        for i in 0..10_000 {
            let x = lo + (hi - lo) * i as f64 / 9_999.0;
            let c = d.cdf(x);
            assert!((0.0..=1.0).contains(&c));
            assert!(c >= prev, "{d:?} at {x}");
            prev = c;
        }
    }
}

#[test]
fn densities_integrate_to_one() {
    for d in table_params() {
        // heavy tails past the 1 − 1e−12 quantile carry < 1e−12 mass
        let (lo, hi) = span(&d);
        let mass = simpson(|x| d.pdf(x), lo, hi, 2_000_000);
        assert!((mass - 1.0).abs() < 1e-6, "{d:?}: {mass}");
    }
}

#[test]
fn pdf_is_derivative_of_cdf() {
    for d in table_params() {
        let scale = match d {
            FamilyParams::Gumbel(p) => p.scale(),
            FamilyParams::Frechet(p) => p.scale(),
            FamilyParams::Weibull(p) => p.scale(),
            FamilyParams::Gev(p) => p.scale(),
        };
        let h = 1e-5 * scale;
        for i in 1..=100 {
            let x = d.quantile(i as f64 / 101.0).unwrap();
            let fd = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
            assert!((fd - d.pdf(x)).abs() < 1e-5, "{d:?} at {x}");
        }
    }
}

#[test]
fn exp_ln_pdf_matches_pdf() {
    for d in table_params() {
        for i in 1..=1000 {
            let x = d.quantile(i as f64 / 1001.0).unwrap();
            let pdf = d.pdf(x);
            let rel = (d.ln_pdf(x).exp() - pdf).abs() / pdf;
            assert!(rel < 1e-12);
        }
    }
}

#[test]
fn ln_pdf_far_in_tail_is_finite() {
    let gev = table_gev();
    // pdf underflows to zero here, the log density does not
    let x = 1e30;
    assert_eq!(gev.pdf(x), 0.0);
    assert!(gev.ln_pdf(x).is_finite());
}

#[test]
fn quantile_inverts_cdf() {
    for d in table_params() {
        for i in 1..=999 {
            let p = i as f64 / 1000.0;
            let q = d.quantile(p).unwrap();
            assert!((d.cdf(q) - p).abs() < 1e-10);
        }
    }
    let gev = table_gev();
    for x in [50.0, 112.09, 264.4] {
        assert!((gev.quantile(gev.cdf(x)).unwrap() - x).abs() < 1e-9);
    }
}

#[test]
fn quantile_agrees_with_bisection() {
    let gev = table_gev();
    let q = gev.quantile(0.99).unwrap();
    let b = bisect_quantile(&gev, 0.99, 0.0, 1000.0);
    assert!((q - b).abs() < 1e-8);
    assert!((q - 255.84).abs() < 0.01);
}

#[test]
fn gumbel_limit_continuity() {
    let gum = GumbelParams::new(93.61, 32.02).unwrap();
    for k in [1e-12, -1e-12] {
        let gev = GevParams::new(93.61, 32.02, k).unwrap();
        for i in 1..=100 {
            let p = i as f64 / 101.0;
            let x = gum.quantile(p).unwrap();
            assert!((gev.pdf(x) - gum.pdf(x)).abs() < 1e-8);
            assert!((gev.cdf(x) - gum.cdf(x)).abs() < 1e-8);
            assert!((gev.quantile(p).unwrap() - x).abs() < 1e-8);
        }
    }
}

#[test]
fn small_but_nonzero_shape_is_continuous() {
    // just above the threshold the GEV formulas take over
    let gum = GumbelParams::new(0.0, 1.0).unwrap();
    let gev = GevParams::new(0.0, 1.0, 2e-8).unwrap();
    for x in [-2.0, 0.0, 1.0, 5.0] {
        assert!((gev.cdf(x) - gum.cdf(x)).abs() < 1e-6);
        assert!((gev.pdf(x) - gum.pdf(x)).abs() < 1e-6);
    }
}

#[test]
fn samples_lie_in_support_and_match_cdf() {
    for d in table_params() {
        let s = sample(&d, 100_000, 2024).unwrap();
        let support = d.support();
        assert!(s.values().iter().all(|&x| support.contains(x)));
        // brute-force Kolmogorov distance against the step ecdf
        let sorted = s.sorted();
        let n = sorted.len() as f64;
        let ks = sorted
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let f = d.cdf(x);
                (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
            })
            .fold(0.0, f64::max);
        assert!(ks < 0.01, "{d:?}: {ks}");
    }
}

#[test]
fn sampling_is_reproducible() {
    let gev = table_gev();
    let a = sample(&gev, 5, 42).unwrap();
    let b = sample(&gev, 5, 42).unwrap();
    let bits = |s: &blockmax_core::Sample| s.values().iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&a), bits(&b));
}

#[test]
fn implied_means_use_gamma_function() {
    // statrs' gamma is an independent evaluation
    use statrs::function::gamma::gamma;
    let [gumbel, frechet, weibull, gev] = table_params();
    let euler = 0.577_215_664_901_532_9;
    assert!((gumbel.mean().unwrap() - (93.61 + euler * 32.02)).abs() < 1e-9);
    assert!((frechet.mean().unwrap() - 88.16 * gamma(1.0 - 1.0 / 3.37)).abs() < 1e-9);
    assert!((weibull.mean().unwrap() - 122.27 * gamma(1.0 + 1.0 / 3.34)).abs() < 1e-9);
    assert!((gev.mean().unwrap() - (92.41 + 30.85 * (gamma(0.94) - 1.0) / 0.06)).abs() < 1e-9);
}

proptest! {
    #[test]
    fn gev_cdf_quantile_round_trip(
        loc in -100.0f64..100.0,
        scale in 0.1f64..50.0,
        shape in -0.5f64..0.5,
        p in 0.001f64..0.999,
    ) {
        let d = GevParams::new(loc, scale, shape).unwrap();
        let q = d.quantile(p).unwrap();
        prop_assert!(d.support().contains(q));
        prop_assert!((d.cdf(q) - p).abs() < 1e-10);
    }

    #[test]
    fn quantile_strictly_increasing(p in 0.001f64..0.99, dp in 1e-4f64..0.009) {
        for d in table_params() {
            prop_assert!(d.quantile(p).unwrap() < d.quantile(p + dp).unwrap());
        }
    }
}
