#![allow(dead_code)]

#[allow(clippy::excessive_precision)]
pub mod slack_table;

use fedpriv::models::{Dataset, HuberHinge, Label, LossKind, Logistic, SmoothedPerceptron};
use rand::Rng;
use std::sync::Arc;

/// Random labelled rows, rescaled so the largest row norm is `max_norm`.
pub fn random_dataset<R: Rng>(rng: &mut R, n: usize, dim: usize, max_norm: f64) -> Dataset {
    let mut features: Vec<f64> = (0..n * dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    let largest = features
        .chunks(dim)
        .map(|r| r.iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    if largest > 0.0 {
        features.iter_mut().for_each(|x| *x *= max_norm / largest);
    }
    let labels = (0..n)
        .map(|_| if rng.random_bool(0.5) { Label::Positive } else { Label::Negative })
        .collect();
    Dataset::new(dim, features, labels).unwrap()
}

pub fn all_losses() -> Vec<LossKind> {
    vec![
        Arc::new(Logistic),
        Arc::new(HuberHinge::new(0.5).unwrap()),
        Arc::new(SmoothedPerceptron::new(0.5).unwrap()),
    ]
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if got == want {
        0.0
    } else {
        (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
    }
}
