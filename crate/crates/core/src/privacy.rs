//! ε-differential privacy for regularized ERM by objective perturbation.
//!
//! The released model is the exact minimizer of
//!
//! ```text
//! (1/n) Σ ℓ(yᵢ⟨w,xᵢ⟩) + ((λ + Δ)/2)‖w‖² + ⟨b,w⟩/n
//! ```
//!
//! with `b` drawn from the density ν(b) ∝ exp(−(ε′/2)‖b‖). The guarantee
//! requires ‖xᵢ‖ ≤ 1, |ℓ′| ≤ 1, |ℓ″| ≤ c and λ > 0; see
//! [`validate_preconditions`]. It covers the minimizer only: releasing
//! intermediate iterates of a training loop is outside the guarantee.

use std::fmt;

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::error::{Error, Result};
use crate::models::{Dataset, Loss};
use crate::seed;

/// Largest row norm accepted as "within the unit ball".
pub const NORM_TOLERANCE: f64 = 1.0 + 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrivacyParams {
    pub epsilon: f64,
    pub lambda: f64,
}

impl PrivacyParams {
    pub fn new(epsilon: f64, lambda: f64) -> Result<Self> {
        positive("epsilon", epsilon)?;
        positive("lambda", lambda)?;
        Ok(PrivacyParams { epsilon, lambda })
    }
}

/// Noise vector `b` plus the extra regularization `Δ` and effective budget `ε′`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationVector {
    pub b: Vec<f64>,
    pub delta: f64,
    pub epsilon_eff: f64,
}

impl PerturbationVector {
    pub fn dim(&self) -> usize {
        self.b.len()
    }

    pub fn noise_norm(&self) -> f64 {
        self.b.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be positive and finite, got {v}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slack {
    pub epsilon_eff: f64,
    pub delta: f64,
}

/// Splits the budget `epsilon` between the curvature correction and the noise.
///
/// ε′ = ε − ln(1 + 2c/(nλ) + c²/(n²λ²)). When that leaves nothing, the noise
/// gets ε/2 and the objective gains Δ = c/(n(e^{ε/4} − 1)) − λ of extra
/// regularization instead.
pub fn compute_slack(epsilon: f64, c: f64, n: usize, lambda: f64) -> Result<Slack> {
    positive("epsilon", epsilon)?;
    positive("c", c)?;
    positive("lambda", lambda)?;
    if n == 0 {
        return Err(Error::invalid("n", "must be at least 1"));
    }
    let n = n as f64;
    // ln(1 + 2x + x²) = 2 ln(1 + x), x = c/(nλ)
    let x = c / (n * lambda);
    let epsilon_eff = epsilon - 2.0 * x.ln_1p();
    if epsilon_eff > 0.0 {
        Ok(Slack {
            epsilon_eff,
            delta: 0.0,
        })
    } else {
        Ok(Slack {
            epsilon_eff: epsilon / 2.0,
            delta: c / (n * (epsilon / 4.0).exp_m1()) - lambda,
        })
    }
}

/// The noise distribution ν(b) ∝ exp(−(ε′/2)‖b‖) on ℝ^dim.
///
/// Sampled as a Gamma(dim, 2/ε′) radius times a uniform direction.
#[derive(Debug, Clone, Copy)]
pub struct ObjectiveNoise {
    dim: usize,
    radius: Gamma<f64>,
}

impl ObjectiveNoise {
    pub fn new(dim: usize, epsilon_eff: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "must be at least 1"));
        }
        positive("epsilon_eff", epsilon_eff)?;
        let radius = Gamma::new(dim as f64, 2.0 / epsilon_eff)
            .map_err(|e| Error::invalid("epsilon_eff", e.to_string()))?;
        Ok(ObjectiveNoise { dim, radius })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Uniform point on the unit sphere in `dim` dimensions.
pub fn unit_direction<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

impl Distribution<Vec<f64>> for ObjectiveNoise {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let r = self.radius.sample(rng);
        let mut u = unit_direction(self.dim, rng);
        u.iter_mut().for_each(|x| *x *= r);
        u
    }
}

pub fn sample_noise(dim: usize, epsilon_eff: f64, rng_seed: u64) -> Result<Vec<f64>> {
    let noise = ObjectiveNoise::new(dim, epsilon_eff)?;
    Ok(noise.sample(&mut seed::rng(rng_seed)))
}

/// Draws the perturbation one party applies to its objective over `n` records.
pub fn make_perturbation(
    params: PrivacyParams,
    loss: &dyn Loss,
    n: usize,
    dim: usize,
    rng_seed: u64,
) -> Result<PerturbationVector> {
    let c = loss.smoothness_bound();
    let slack = compute_slack(params.epsilon, c, n, params.lambda)?;
    let b = sample_noise(dim, slack.epsilon_eff, rng_seed)?;
    Ok(PerturbationVector {
        b,
        delta: slack.delta,
        epsilon_eff: slack.epsilon_eff,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Row whose L2 norm exceeds 1.
    RowNorm { row: usize, norm: f64 },
    /// λ ≤ 0 leaves the objective without strong convexity.
    StrongConvexity { lambda: f64 },
    NonPositiveEpsilon { epsilon: f64 },
    UnboundedSmoothness { loss: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowNorm { row, norm } => {
                write!(f, "row {row} has L2 norm {norm} > 1")
            }
            Violation::StrongConvexity { lambda } => {
                write!(f, "strong convexity requires lambda > 0, got {lambda}")
            }
            Violation::NonPositiveEpsilon { epsilon } => {
                write!(f, "epsilon must be positive, got {epsilon}")
            }
            Violation::UnboundedSmoothness { loss } => {
                write!(f, "loss {loss} has no finite curvature bound")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PreconditionReport {
    pub violations: Vec<Violation>,
    pub max_row_norm: f64,
}

impl PreconditionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Preconditions(self.to_string()))
        }
    }
}

impl fmt::Display for PreconditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass (max row norm {})", self.max_row_norm);
        }
        const SHOWN: usize = 5;
        let parts: Vec<String> = self.violations.iter().take(SHOWN).map(ToString::to_string).collect();
        write!(f, "fail: {}", parts.join("; "))?;
        if self.violations.len() > SHOWN {
            write!(f, "; and {} more", self.violations.len() - SHOWN)?;
        }
        Ok(())
    }
}

/// Checks every condition the privacy guarantee rests on.
pub fn validate_preconditions(
    data: &Dataset,
    params: &PrivacyParams,
    loss: &dyn Loss,
) -> PreconditionReport {
    let mut report = PreconditionReport::default();
    for (row, norm) in data.row_norms().enumerate() {
        report.max_row_norm = report.max_row_norm.max(norm);
        if norm.is_nan() || norm > NORM_TOLERANCE {
            report.violations.push(Violation::RowNorm { row, norm });
        }
    }
    if params.lambda.is_nan() || params.lambda <= 0.0 {
        report.violations.push(Violation::StrongConvexity {
            lambda: params.lambda,
        });
    }
    if params.epsilon.is_nan() || params.epsilon <= 0.0 {
        report.violations.push(Violation::NonPositiveEpsilon {
            epsilon: params.epsilon,
        });
    }
    let c = loss.smoothness_bound();
    if !(c.is_finite() && c > 0.0) {
        report.violations.push(Violation::UnboundedSmoothness { loss: loss.name() });
    }
    report
}
