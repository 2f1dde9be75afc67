//! Seeded mini-batch gradient descent shared by centralized and per-site training.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::models::{Dataset, Loss, Objective, Weights};
use crate::privacy::PerturbationVector;
use crate::seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BatchSize {
    Fixed(usize),
    /// Full-batch gradient descent.
    All,
}

impl BatchSize {
    fn resolve(self, n: usize) -> usize {
        match self {
            BatchSize::Fixed(b) => b.min(n),
            BatchSize::All => n,
        }
    }
}

impl fmt::Display for BatchSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BatchSize::Fixed(b) => write!(f, "{b}"),
            BatchSize::All => f.write_str("all"),
        }
    }
}

impl FromStr for BatchSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(BatchSize::All);
        }
        match s.parse::<usize>() {
            Ok(b) if b > 0 => Ok(BatchSize::Fixed(b)),
            _ => Err(Error::invalid("batch-size", format!("expected a positive integer or `all`, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    pub learning_rate: f64,
    pub epochs: usize,
    pub batch_size: BatchSize,
    /// Relative loss improvement below which training stops.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            learning_rate: 0.1,
            epochs: 50,
            batch_size: BatchSize::Fixed(64),
            tolerance: 1e-4,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(Error::invalid("learning-rate", format!("must be positive and finite, got {}", self.learning_rate)));
        }
        if self.batch_size == BatchSize::Fixed(0) {
            return Err(Error::invalid("batch-size", "must be positive"));
        }
        if !(self.tolerance >= 0.0 && self.tolerance.is_finite()) {
            return Err(Error::invalid("tolerance", format!("must be finite and non-negative, got {}", self.tolerance)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainResult {
    pub weights: Weights,
    /// Objective value after each completed epoch.
    pub loss_history: Vec<f64>,
    pub converged: bool,
    pub epochs_run: usize,
}

/// True iff the last relative improvement in `history` is below `tolerance`.
///
/// The denominator uses |loss| because a perturbed objective can go negative.
pub fn has_converged(history: &[f64], tolerance: f64) -> bool {
    match history {
        [.., prev, last] => (last - prev).abs() / prev.abs().max(1e-12) < tolerance,
        _ => false,
    }
}

/// Minimizes the (optionally perturbed) regularized objective from `w0`.
///
/// Rows are visited in a fresh seeded permutation each epoch and the trailing
/// partial batch is kept. A full-sized batch skips shuffling, which makes
/// full-batch runs independent of the seed.
pub fn minimize(
    data: &Dataset,
    loss: &dyn Loss,
    lambda: f64,
    perturb: Option<&PerturbationVector>,
    w0: Weights,
    cfg: &OptimizerConfig,
) -> Result<TrainResult> {
    cfg.validate()?;
    let objective = Objective::new(data, loss, lambda, perturb)?;
    if w0.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.dim(),
            actual: w0.dim(),
        });
    }

    let n = data.len();
    let batch = cfg.batch_size.resolve(n);
    let mut rng = seed::rng(cfg.seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut w = w0;
    let mut grad = vec![0.0; data.dim()];
    let mut history = Vec::with_capacity(cfg.epochs);
    let mut converged = false;

    for epoch in 0..cfg.epochs {
        if batch < n {
            order.shuffle(&mut rng);
        }
        for chunk in order.chunks(batch) {
            objective.accumulate_grad(&w, chunk.iter().copied(), &mut grad);
            for (wj, gj) in w.as_mut_slice().iter_mut().zip(&grad) {
                *wj -= cfg.learning_rate * gj;
            }
        }
        let value = objective.value(&w)?;
        if !value.is_finite() || !w.is_finite() {
            return Err(Error::Diverged { epoch, site: None });
        }
        history.push(value);
        if has_converged(&history, cfg.tolerance) {
            converged = true;
            break;
        }
    }

    Ok(TrainResult {
        weights: w,
        epochs_run: history.len(),
        loss_history: history,
        converged,
    })
}
