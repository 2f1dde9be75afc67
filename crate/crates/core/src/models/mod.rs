//! Linear binary classifiers: losses, the regularized objective and metrics.

mod loss;
mod metrics;
mod objective;
mod types;

pub use loss::{
    HuberHinge, Logistic, Loss, LossBuilder, LossKind, LossRegistry, SmoothedPerceptron,
    DEFAULT_SMOOTHING,
};
pub use metrics::{evaluate, f1_score, predict, predict_all, Confusion};
pub use objective::{objective, objective_grad, Objective};
pub use types::{Dataset, Example, Label, Weights};
