//! Synthetic cohorts standing in for clinical tables that cannot be shipped.
//! They reproduce only the cohort shape: size, width and positive rate.

use rand::Rng;
use rand_distr::StandardNormal;

use super::{preprocess, RawTable, DEFAULT_LABEL_COLUMN};
use crate::error::{Error, Result};
use crate::models::{Dataset, Label};
use crate::privacy::unit_direction;
use crate::seed::{self, tag};

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n: usize,
    pub dim: usize,
    pub positive_rate: f64,
    /// Distance between the two class means, along one fixed direction.
    pub class_separation: f64,
    pub noise_scale: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n", "must be positive"));
        }
        if self.dim == 0 {
            return Err(Error::invalid("dim", "must be positive"));
        }
        if !(self.positive_rate > 0.0 && self.positive_rate < 1.0) {
            return Err(Error::invalid("positive_rate", format!("must lie in (0, 1), got {}", self.positive_rate)));
        }
        if !(self.class_separation >= 0.0 && self.class_separation.is_finite()) {
            return Err(Error::invalid("class_separation", "must be finite and non-negative"));
        }
        if !(self.noise_scale > 0.0 && self.noise_scale.is_finite()) {
            return Err(Error::invalid("noise_scale", "must be positive"));
        }
        Ok(())
    }
}

/// Named cohorts: `(name, spec)`.
///
/// * `lced-like`: large, rare-positive claims-style cohort (desk-scale n).
/// * `mimic-like`: 21,139 ICU-stay-sized cohort, 100 features.
/// * `separable`: well-separated benchmark cohort.
pub const COHORTS: [(&str, SyntheticSpec); 3] = [
    (
        "lced-like",
        SyntheticSpec {
            n: 50_000,
            dim: 30,
            positive_rate: 0.05,
            class_separation: 4.0,
            noise_scale: 1.0,
            seed: 0,
        },
    ),
    (
        "mimic-like",
        SyntheticSpec {
            n: 21_139,
            dim: 100,
            positive_rate: 0.13,
            class_separation: 3.0,
            noise_scale: 1.0,
            seed: 0,
        },
    ),
    (
        "separable",
        SyntheticSpec {
            n: 20_000,
            dim: 20,
            positive_rate: 0.2,
            class_separation: 10.0,
            noise_scale: 1.0,
            seed: 0,
        },
    ),
];

pub fn named_cohort(name: &str) -> Result<SyntheticSpec> {
    COHORTS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, s)| s.clone())
        .ok_or_else(|| Error::UnknownName {
            kind: "synthetic cohort",
            name: name.to_string(),
            known: COHORTS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "),
        })
}

/// Unscaled class-conditional Gaussian table: x = y·(sep/2)·u + noise·N(0, I).
pub fn generate_synthetic_table(spec: &SyntheticSpec) -> Result<RawTable> {
    spec.validate()?;
    let mut rng = seed::rng(seed::derive(spec.seed, &[tag::SYNTHETIC]));
    let direction = unit_direction(spec.dim, &mut rng);
    let half = spec.class_separation / 2.0;
    let mut rows = Vec::with_capacity(spec.n);
    let mut labels = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let label = if rng.random::<f64>() < spec.positive_rate {
            Label::Positive
        } else {
            Label::Negative
        };
        let shift = label.sign() * half;
        let row = direction
            .iter()
            .map(|u| {
                let z: f64 = rng.sample(StandardNormal);
                shift * u + spec.noise_scale * z
            })
            .collect();
        rows.push(row);
        labels.push(label);
    }
    Ok(RawTable {
        feature_names: (0..spec.dim).map(|j| format!("x{j}")).collect(),
        rows,
        labels,
        label_column: DEFAULT_LABEL_COLUMN.to_string(),
    })
}

/// The synthetic table with a bias column appended, scaled into the unit ball.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<Dataset> {
    Ok(preprocess(&generate_synthetic_table(spec)?, true)?.0)
}
