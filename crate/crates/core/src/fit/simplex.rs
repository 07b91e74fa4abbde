//! Nelder-Mead simplex minimizer.

use alloc::vec;
use alloc::vec::Vec;

use super::OptimizerConfig;

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;
const MAX_RESTARTS: usize = 8;

#[derive(Debug, Clone)]
pub(crate) struct Minimum {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// NaN counts as +∞ so infeasible vertices always rank worst.
fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Minimizes `f` from `start`, building the first simplex with `steps`.
///
/// Converges when the spread of vertex values is at most
/// `function_tolerance` and every vertex is within `parameter_tolerance` of
/// the best one in each coordinate. After convergence the search restarts
/// from the best vertex until a restart no longer improves it.
pub(crate) fn minimize<F>(mut f: F, start: &[f64], steps: &[f64], cfg: &OptimizerConfig) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let mut best = start.to_vec();
    let mut best_value = sanitize(f(start));
    let mut iterations = 0;

    for _ in 0..=MAX_RESTARTS {
        let budget = cfg.max_iterations.saturating_sub(iterations);
        let run = run_once(&mut f, &best, steps, cfg, budget);
        iterations += run.iterations;
        let improvement = best_value - run.value;
        let keep = run.value <= best_value;
        if keep {
            best = run.point;
            best_value = run.value;
        }
        if !run.converged {
            return Minimum { point: best, value: best_value, iterations, converged: false };
        }
        if improvement.is_nan() || improvement <= cfg.function_tolerance {
            break;
        }
    }
    Minimum { point: best, value: best_value, iterations, converged: best_value.is_finite() }
}

fn run_once<F>(f: &mut F, start: &[f64], steps: &[f64], cfg: &OptimizerConfig, budget: usize) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = start.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(start.to_vec());
    for (i, step) in steps.iter().enumerate() {
        let mut p = start.to_vec();
        p[i] += step;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| sanitize(f(p))).collect();
    let mut order: Vec<usize> = (0..=dim).collect();
    let mut iterations = 0;

    loop {
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let best = order[0];
        let worst = order[dim];
        let second_worst = order[dim - 1];

        if has_converged(&simplex, &values, best, worst, cfg) {
            return Minimum {
                point: simplex[best].clone(),
                value: values[best],
                iterations,
                converged: true,
            };
        }
        if iterations >= budget {
            return Minimum {
                point: simplex[best].clone(),
                value: values[best],
                iterations,
                converged: false,
            };
        }
        iterations += 1;

        let mut centroid = vec![0.0; dim];
        for &idx in &order[..dim] {
            for (c, x) in centroid.iter_mut().zip(&simplex[idx]) {
                *c += x;
            }
        }
        centroid.iter_mut().for_each(|c| *c /= dim as f64);

        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let reflected = along(REFLECT);
        let f_reflected = sanitize(f(&reflected));

        if f_reflected < values[best] {
            let expanded = along(REFLECT * EXPAND);
            let f_expanded = sanitize(f(&expanded));
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        // outside contraction if the reflection beat the worst vertex, inside otherwise
        let (contracted, f_contracted) = if f_reflected < values[worst] {
            let p = along(REFLECT * CONTRACT);
            let v = sanitize(f(&p));
            (p, v)
        } else {
            let p = along(-CONTRACT);
            let v = sanitize(f(&p));
            (p, v)
        };
        if f_contracted < values[worst].min(f_reflected) {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }

        let anchor = simplex[best].clone();
        for &idx in &order[1..] {
            for (x, a) in simplex[idx].iter_mut().zip(&anchor) {
                *x = a + SHRINK * (*x - a);
            }
            values[idx] = sanitize(f(&simplex[idx]));
        }
    }
}

fn has_converged(
    simplex: &[Vec<f64>],
    values: &[f64],
    best: usize,
    worst: usize,
    cfg: &OptimizerConfig,
) -> bool {
    if !values[best].is_finite() || !values[worst].is_finite() {
        return false;
    }
    if values[worst] - values[best] > cfg.function_tolerance {
        return false;
    }
    simplex.iter().all(|p| {
        p.iter()
            .zip(&simplex[best])
            .all(|(x, b)| (x - b).abs() <= cfg.parameter_tolerance)
    })
}
