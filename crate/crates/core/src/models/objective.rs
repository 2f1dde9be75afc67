//! Regularized empirical risk, optionally with the objective-perturbation terms
//!
//! J(w) = (1/n) Σ ℓ(yᵢ⟨w,xᵢ⟩) + (λ/2)‖w‖² [+ (Δ/2)‖w‖² + ⟨b,w⟩/n]

use super::loss::Loss;
use super::types::{dot, Dataset, Weights};
use crate::error::{Error, Result};
use crate::privacy::PerturbationVector;

/// A fully bound objective over one dataset.
#[derive(Debug, Clone, Copy)]
pub struct Objective<'a> {
    data: &'a Dataset,
    loss: &'a dyn Loss,
    lambda: f64,
    perturbation: Option<&'a PerturbationVector>,
}

impl<'a> Objective<'a> {
    pub fn new(
        data: &'a Dataset,
        loss: &'a dyn Loss,
        lambda: f64,
        perturbation: Option<&'a PerturbationVector>,
    ) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::invalid("lambda", format!("must be positive and finite, got {lambda}")));
        }
        data.require_non_empty()?;
        if let Some(p) = perturbation {
            if p.dim() != data.dim() {
                return Err(Error::DimensionMismatch {
                    expected: data.dim(),
                    actual: p.dim(),
                });
            }
        }
        Ok(Objective {
            data,
            loss,
            lambda,
            perturbation,
        })
    }

    pub fn data(&self) -> &'a Dataset {
        self.data
    }

    /// λ + Δ.
    pub fn total_regularization(&self) -> f64 {
        self.lambda + self.perturbation.map_or(0.0, |p| p.delta)
    }

    fn check(&self, w: &[f64]) -> Result<()> {
        if w.len() != self.data.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.data.dim(),
                actual: w.len(),
            });
        }
        Ok(())
    }

    pub fn value(&self, w: &Weights) -> Result<f64> {
        self.check(w)?;
        let n = self.data.len() as f64;
        let risk = self
            .data
            .iter()
            .map(|(x, y)| self.loss.value(y.sign() * dot(w, x)))
            .sum::<f64>()
            / n;
        let mut total = risk + 0.5 * self.total_regularization() * w.norm_sq();
        if let Some(p) = self.perturbation {
            total += dot(&p.b, w) / n;
        }
        Ok(total)
    }

    pub fn grad(&self, w: &Weights) -> Result<Weights> {
        self.check(w)?;
        let mut out = vec![0.0; w.dim()];
        self.accumulate_grad(w, 0..self.data.len(), &mut out);
        Ok(Weights::from(out))
    }

    /// Gradient estimate from the rows in `batch`: the data term is averaged
    /// over the batch, the regularization and linear noise terms are exact.
    /// Caller guarantees `w` has the data dimension and `batch` is non-empty.
    pub(crate) fn accumulate_grad(
        &self,
        w: &[f64],
        batch: impl ExactSizeIterator<Item = usize>,
        out: &mut [f64],
    ) {
        let m = batch.len() as f64;
        out.iter_mut().for_each(|g| *g = 0.0);
        for i in batch {
            let x = self.data.row(i);
            let y = self.data.label(i).sign();
            let coef = self.loss.grad(y * dot(w, x)) * y;
            if coef != 0.0 {
                for (g, xi) in out.iter_mut().zip(x) {
                    *g += coef * xi;
                }
            }
        }
        let reg = self.total_regularization();
        let n = self.data.len() as f64;
        for (j, g) in out.iter_mut().enumerate() {
            *g = *g / m + reg * w[j];
        }
        if let Some(p) = self.perturbation {
            for (g, bj) in out.iter_mut().zip(&p.b) {
                *g += bj / n;
            }
        }
    }
}

pub fn objective(
    w: &Weights,
    data: &Dataset,
    loss: &dyn Loss,
    lambda: f64,
    perturb: Option<&PerturbationVector>,
) -> Result<f64> {
    Objective::new(data, loss, lambda, perturb)?.value(w)
}

pub fn objective_grad(
    w: &Weights,
    data: &Dataset,
    loss: &dyn Loss,
    lambda: f64,
    perturb: Option<&PerturbationVector>,
) -> Result<Weights> {
    Objective::new(data, loss, lambda, perturb)?.grad(w)
}
