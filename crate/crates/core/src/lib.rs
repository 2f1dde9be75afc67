//! Federated training of linear classifiers with ε-differential privacy by
//! objective perturbation, plus an experiment harness comparing centralized,
//! federated and private federated training.

pub mod data;
pub mod error;
pub mod experiments;
pub mod federation;
pub mod models;
pub mod optimizer;
pub mod privacy;
pub mod seed;

pub use error::{Error, Result};
