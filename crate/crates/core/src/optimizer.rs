//! Multi-start maximization of `Q/|W|³` over the unit sphere of Weyl coordinates.
//!
//! Each run is Riemannian gradient ascent with the projection retraction
//! `x ← (x + t g)/|x + t g|` and Armijo backtracking on `t`. After an
//! accepted step the next trial step is twice the accepted one, so the
//! line search adapts to the local curvature in both directions. Once
//! ratio differences drop to rounding level, a step is judged by the gain
//! the trapezoid rule predicts from the slopes at both of its ends, which
//! lets the gradient norm fall well below the square root of machine
//! precision.
//!
//! Starting points are standard-normal vectors normalized to unit length,
//! drawn from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`) with one
//! stream per run seeded by `master_seed + run_index` (wrapping). Runs are
//! independent, so the search result does not depend on how many threads
//! execute it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::q_functional::{q_value, ratio_and_gradient};
use crate::weyl_space::{WeylBasis, WeylCoords};

/// Backtracking gives up once the trial step falls below this.
pub const STEP_FLOOR: f64 = 1e-16;

/// Gradient norm accepted as converged when the step floor is hit.
pub const STALL_GRAD_TOL: f64 = 1e-8;

/// Relative size of ratio differences treated as rounding noise by the
/// line search.
pub const ROUNDING_BAND: f64 = 16.0 * f64::EPSILON;

/// Floor substituted for exact zeros in [`error_log`].
pub const ERROR_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub dim: usize,
    pub starts: usize,
    pub master_seed: u64,
    pub grad_tol: f64,
    pub max_iter: usize,
    pub armijo_c: f64,
    pub backtrack: f64,
    pub initial_step: f64,
}

impl RunConfig {
    pub fn new(dim: usize, starts: usize, master_seed: u64) -> Self {
        Self {
            dim,
            starts,
            master_seed,
            grad_tol: 1e-10,
            max_iter: 10_000,
            armijo_c: 1e-4,
            backtrack: 0.5,
            initial_step: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(what.to_string()));
        if !(self.backtrack > 0.0 && self.backtrack < 1.0) {
            return bad("backtrack factor must lie in (0, 1)");
        }
        if !(self.armijo_c > 0.0 && self.armijo_c < 1.0) {
            return bad("Armijo constant must lie in (0, 1)");
        }
        if self.grad_tol.is_nan() || self.grad_tol <= 0.0 {
            return bad("gradient tolerance must be positive");
        }
        if self.initial_step.is_nan() || self.initial_step <= 0.0 {
            return bad("initial step must be positive");
        }
        Ok(())
    }

    /// Seed of run `index`.
    pub fn run_seed(&self, index: usize) -> u64 {
        self.master_seed.wrapping_add(index as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterateRecord {
    pub k: usize,
    pub ratio: f64,
    pub grad_norm: f64,
    /// Step length accepted to reach this iterate (0 for the start).
    pub step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Converged,
    MaxIterReached,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub status: RunStatus,
    pub best_ratio: f64,
    pub best_coords: WeylCoords,
    pub trace: Vec<IterateRecord>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub dim: usize,
    pub config: RunConfig,
    pub runs: Vec<RunResult>,
    pub best: usize,
}

impl SearchSummary {
    pub fn best_run(&self) -> &RunResult {
        &self.runs[self.best]
    }

    pub fn best_ratio(&self) -> f64 {
        self.best_run().best_ratio
    }
}

pub fn run_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard-normal sample of length `m` scaled to unit norm.
pub fn random_unit_coords<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Result<WeylCoords> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "cannot sample on a zero-dimensional space".into(),
        ));
    }
    loop {
        let raw = WeylCoords::new((0..m).map(|_| rng.sample(StandardNormal)).collect());
        if let Some(unit) = raw.normalized() {
            return Ok(unit);
        }
    }
}

fn unit_ratio(x: &WeylCoords, basis: &WeylBasis) -> Result<f64> {
    let w = basis.embed(x)?;
    Ok(q_value(&w) / x.norm().powi(3))
}

/// One ascent run from `start`. `seed` is recorded in the result only.
pub fn ascend(
    start: &WeylCoords,
    basis: &WeylBasis,
    config: &RunConfig,
    seed: u64,
) -> Result<RunResult> {
    config.validate()?;
    if start.len() != basis.m() {
        return Err(Error::DimensionMismatch {
            expected: basis.m(),
            found: start.len(),
        });
    }
    let norm = start.norm();
    if norm == 0.0 {
        return Err(Error::InvalidArgument("ascent start has zero norm".into()));
    }
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "ascent start must be a unit vector (norm {norm})"
        )));
    }

    let mut x = start.normalized().expect("nonzero norm");
    let mut trace = Vec::new();
    let mut trial = config.initial_step;
    let mut accepted = 0.0;
    let mut k = 0;
    let mut best = (f64::NEG_INFINITY, x.clone());
    let status = loop {
        let (f, mut g) = ratio_and_gradient(&x, basis)?;
        // the coordinate gradient is tangent already; strip rounding drift
        let along: f64 = g.values.iter().zip(&x.values).map(|(a, b)| a * b).sum();
        for (gi, xi) in g.values.iter_mut().zip(&x.values) {
            *gi -= along * xi;
        }
        let grad_sq: f64 = g.values.iter().map(|v| v * v).sum();
        let grad_norm = grad_sq.sqrt();
        trace.push(IterateRecord {
            k,
            ratio: f,
            grad_norm,
            step: accepted,
        });
        if f > best.0 {
            best = (f, x.clone());
        }

        if grad_norm <= config.grad_tol {
            break RunStatus::Converged;
        }
        if k >= config.max_iter {
            break RunStatus::MaxIterReached;
        }

        let mut t = trial;
        let next = loop {
            let moved = WeylCoords::new(
                x.values
                    .iter()
                    .zip(&g.values)
                    .map(|(a, b)| a + t * b)
                    .collect(),
            );
            let y = moved
                .normalized()
                .expect("tangent step keeps the point off the origin");
            let gain = unit_ratio(&y, basis)? - f;
            // compare the gain itself: `f + c t |g|²` rounds to `f` near the
            // maximum and would accept steps that do not move the ratio
            if gain >= config.armijo_c * t * grad_sq {
                break Some(y);
            }
            // below the resolution of `f`, estimate the gain by the
            // trapezoid rule on the slopes at both ends of the step
            if gain.abs() <= ROUNDING_BAND * f.abs().max(1.0) {
                let (_, gy) = ratio_and_gradient(&y, basis)?;
                let slope_end = gy
                    .values
                    .iter()
                    .zip(&g.values)
                    .map(|(a, b)| a * b)
                    .sum::<f64>()
                    / moved.norm();
                if 0.5 * t * (grad_sq + slope_end) >= config.armijo_c * t * grad_sq {
                    break Some(y);
                }
            }
            t *= config.backtrack;
            if t < STEP_FLOOR {
                break None;
            }
        };
        match next {
            Some(y) => {
                x = y;
                accepted = t;
                trial = 2.0 * t;
                k += 1;
            }
            None if grad_norm <= STALL_GRAD_TOL => break RunStatus::Converged,
            None => break RunStatus::MaxIterReached,
        }
    };

    let (best_ratio, best_coords) = best;
    Ok(RunResult {
        status,
        best_ratio,
        best_coords,
        trace,
        seed,
    })
}

/// Runs `config.starts` independent ascents and reports the best.
pub fn search(config: &RunConfig, basis: &WeylBasis) -> Result<SearchSummary> {
    config.validate()?;
    if basis.dim() != config.dim {
        return Err(Error::DimensionMismatch {
            expected: config.dim,
            found: basis.dim(),
        });
    }
    if config.starts == 0 {
        return Err(Error::InvalidArgument(
            "at least one start is required".into(),
        ));
    }
    let runs = (0..config.starts)
        .into_par_iter()
        .map(|index| {
            let seed = config.run_seed(index);
            let start = random_unit_coords(&mut run_rng(seed), basis.m())?;
            ascend(&start, basis, config, seed)
        })
        .collect::<Result<Vec<_>>>()?;
    let best = best_index(&runs);
    Ok(SearchSummary {
        dim: config.dim,
        config: config.clone(),
        runs,
        best,
    })
}

/// Index of the largest `best_ratio`, lowest index on ties.
fn best_index(runs: &[RunResult]) -> usize {
    let mut best = 0;
    for (i, run) in runs.iter().enumerate() {
        if run.best_ratio > runs[best].best_ratio {
            best = i;
        }
    }
    best
}

/// `(k, |ratio_k − target|)` for every iterate, zeros replaced by [`ERROR_FLOOR`].
pub fn error_log(run: &RunResult, target: f64) -> Vec<(usize, f64)> {
    run.trace
        .iter()
        .map(|rec| {
            let e = (rec.ratio - target).abs();
            (rec.k, if e == 0.0 { ERROR_FLOOR } else { e })
        })
        .collect()
}
