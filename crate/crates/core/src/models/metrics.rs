use super::types::{dot, Dataset, Label, Weights};
use crate::error::{Error, Result};

/// sign(⟨w,x⟩), with ties broken towards +1.
pub fn predict(w: &Weights, x: &[f64]) -> Result<Label> {
    if w.dim() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            actual: x.len(),
        });
    }
    Ok(if dot(w, x) >= 0.0 {
        Label::Positive
    } else {
        Label::Negative
    })
}

pub fn predict_all(w: &Weights, data: &Dataset) -> Result<Vec<Label>> {
    data.iter().map(|(x, _)| predict(w, x)).collect()
}

/// Binary confusion counts with +1 as the positive class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Confusion {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub tn: usize,
}

impl Confusion {
    pub fn from_labels(predictions: &[Label], truth: &[Label]) -> Result<Self> {
        if predictions.len() != truth.len() {
            return Err(Error::LengthMismatch {
                left: predictions.len(),
                right: truth.len(),
            });
        }
        if predictions.is_empty() {
            return Err(Error::EmptyInput("predictions"));
        }
        let mut c = Confusion::default();
        for (&p, &t) in predictions.iter().zip(truth) {
            match (p, t) {
                (Label::Positive, Label::Positive) => c.tp += 1,
                (Label::Positive, Label::Negative) => c.fp += 1,
                (Label::Negative, Label::Positive) => c.fn_ += 1,
                (Label::Negative, Label::Negative) => c.tn += 1,
            }
        }
        Ok(c)
    }

    fn ratio(num: usize, den: usize) -> f64 {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    }

    pub fn precision(&self) -> f64 {
        Self::ratio(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> f64 {
        Self::ratio(self.tp, self.tp + self.fn_)
    }

    /// 2TP / (2TP + FP + FN); 0 when nothing is positive on either side.
    pub fn f1(&self) -> f64 {
        Self::ratio(2 * self.tp, 2 * self.tp + self.fp + self.fn_)
    }
}

pub fn f1_score(predictions: &[Label], truth: &[Label]) -> Result<f64> {
    Ok(Confusion::from_labels(predictions, truth)?.f1())
}

/// Confusion counts of `w` on `data`.
pub fn evaluate(w: &Weights, data: &Dataset) -> Result<Confusion> {
    Confusion::from_labels(&predict_all(w, data)?, data.labels())
}
