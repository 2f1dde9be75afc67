//! Margin losses ℓ(z), z = y⟨w,x⟩.
//!
//! Each loss is convex, non-increasing, has |ℓ′| ≤ 1 and a finite curvature
//! bound c ≥ sup|ℓ″|. The privacy mechanism needs all three properties, which
//! is why the perceptron and hinge losses are Huber-smoothed here.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A twice-differentiable convex margin loss.
pub trait Loss: fmt::Debug + Send + Sync {
    /// Canonical name, parseable by [`LossRegistry::resolve`].
    fn name(&self) -> String;

    fn value(&self, z: f64) -> f64;

    /// ℓ′(z); bounded by 1 in absolute value.
    fn grad(&self, z: f64) -> f64;

    /// c with sup|ℓ″| ≤ c.
    fn smoothness_bound(&self) -> f64;
}

/// Shared handle to a registered loss.
pub type LossKind = Arc<dyn Loss>;

pub const DEFAULT_SMOOTHING: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Logistic;

impl Loss for Logistic {
    fn name(&self) -> String {
        "logistic".to_string()
    }

    fn value(&self, z: f64) -> f64 {
        if z > 0.0 {
            (-z).exp().ln_1p()
        } else {
            -z + z.exp().ln_1p()
        }
    }

    fn grad(&self, z: f64) -> f64 {
        if z >= 0.0 {
            let e = (-z).exp();
            -e / (1.0 + e)
        } else {
            -1.0 / (1.0 + z.exp())
        }
    }

    fn smoothness_bound(&self) -> f64 {
        0.25
    }
}

fn check_width(h: f64) -> Result<f64> {
    if h > 0.0 && h <= 1.0 {
        Ok(h)
    } else {
        Err(Error::invalid("h", format!("smoothing width must lie in (0, 1], got {h}")))
    }
}

/// Huber-smoothed hinge: the SVM loss.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HuberHinge {
    h: f64,
}

impl HuberHinge {
    pub fn new(h: f64) -> Result<Self> {
        Ok(HuberHinge { h: check_width(h)? })
    }

    pub fn width(&self) -> f64 {
        self.h
    }
}

impl Loss for HuberHinge {
    fn name(&self) -> String {
        format!("huber-svm:{}", self.h)
    }

    fn value(&self, z: f64) -> f64 {
        let h = self.h;
        if z > 1.0 + h {
            0.0
        } else if z < 1.0 - h {
            1.0 - z
        } else {
            (1.0 + h - z).powi(2) / (4.0 * h)
        }
    }

    fn grad(&self, z: f64) -> f64 {
        let h = self.h;
        if z > 1.0 + h {
            0.0
        } else if z < 1.0 - h {
            -1.0
        } else {
            -(1.0 + h - z) / (2.0 * h)
        }
    }

    fn smoothness_bound(&self) -> f64 {
        1.0 / (2.0 * self.h)
    }
}

/// Huber-smoothed perceptron loss max(0, -z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothedPerceptron {
    h: f64,
}

impl SmoothedPerceptron {
    pub fn new(h: f64) -> Result<Self> {
        Ok(SmoothedPerceptron { h: check_width(h)? })
    }

    pub fn width(&self) -> f64 {
        self.h
    }
}

impl Loss for SmoothedPerceptron {
    fn name(&self) -> String {
        format!("perceptron:{}", self.h)
    }

    fn value(&self, z: f64) -> f64 {
        let h = self.h;
        if z > h {
            0.0
        } else if z < -h {
            -z
        } else {
            (h - z).powi(2) / (4.0 * h)
        }
    }

    fn grad(&self, z: f64) -> f64 {
        let h = self.h;
        if z > h {
            0.0
        } else if z < -h {
            -1.0
        } else {
            -(h - z) / (2.0 * h)
        }
    }

    fn smoothness_bound(&self) -> f64 {
        1.0 / (2.0 * self.h)
    }
}

/// Builds a loss from an optional numeric parameter (the smoothing width).
pub type LossBuilder = fn(Option<f64>) -> Result<LossKind>;

/// Name → constructor table for losses selectable from configuration.
///
/// Specs take the form `name` or `name:param`, e.g. `logistic`, `svm:0.25`.
#[derive(Clone)]
pub struct LossRegistry {
    builders: BTreeMap<String, LossBuilder>,
}

impl LossRegistry {
    pub fn empty() -> Self {
        LossRegistry {
            builders: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &str, builder: LossBuilder) {
        self.builders.insert(name.to_ascii_lowercase(), builder);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.builders.keys().map(String::as_str)
    }

    pub fn resolve(&self, spec: &str) -> Result<LossKind> {
        let spec = spec.trim();
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => {
                let p = p
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| Error::invalid("loss", format!("bad parameter in `{spec}`")))?;
                (n.trim(), Some(p))
            }
            None => (spec, None),
        };
        let builder =
            self.builders
                .get(&name.to_ascii_lowercase())
                .ok_or_else(|| Error::UnknownName {
                    kind: "loss",
                    name: name.to_string(),
                    known: self.names().collect::<Vec<_>>().join(", "),
                })?;
        builder(param)
    }
}

impl Default for LossRegistry {
    fn default() -> Self {
        let mut r = LossRegistry::empty();
        r.register("logistic", |p| match p {
            None => Ok(Arc::new(Logistic)),
            Some(_) => Err(Error::invalid("loss", "logistic takes no parameter")),
        });
        let svm: LossBuilder =
            |p| Ok(Arc::new(HuberHinge::new(p.unwrap_or(DEFAULT_SMOOTHING))?));
        let perceptron: LossBuilder =
            |p| Ok(Arc::new(SmoothedPerceptron::new(p.unwrap_or(DEFAULT_SMOOTHING))?));
        r.register("huber-svm", svm);
        r.register("svm", svm);
        r.register("perceptron", perceptron);
        r.register("smoothed-perceptron", perceptron);
        r
    }
}

impl fmt::Debug for LossRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.builders.keys()).finish()
    }
}
