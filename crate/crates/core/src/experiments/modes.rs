//! Training modes compared by the experiment runner.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::federation::{run_federation, FederationConfig, PartitionKind, StopReason};
use crate::models::{Dataset, Loss, Weights};
use crate::optimizer::{minimize, OptimizerConfig};
use crate::privacy::PrivacyParams;

/// Everything a mode needs to fit one model.
#[derive(Debug, Clone)]
pub struct FitRequest<'a> {
    pub lambda: f64,
    /// Set for private modes only.
    pub epsilon: Option<f64>,
    pub num_sites: usize,
    pub rounds: usize,
    pub partition: &'a PartitionKind,
    pub optimizer: &'a OptimizerConfig,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fit {
    pub weights: Weights,
    pub rounds_run: usize,
    pub num_sites: usize,
    pub partition: String,
    pub converged: bool,
}

/// One way of turning a training set into a model.
pub trait TrainingMode: fmt::Debug + Send + Sync {
    /// Report label, e.g. `FEDERATED_DP`.
    fn name(&self) -> &str;

    /// Whether the mode consumes a privacy budget (and so sweeps ε).
    fn private(&self) -> bool {
        false
    }

    fn fit(&self, train: &Dataset, loss: &dyn Loss, req: &FitRequest<'_>) -> Result<Fit>;
}

pub type ModeKind = Arc<dyn TrainingMode>;

/// All data pooled at one site; gets `rounds × epochs` epochs.
#[derive(Debug, Clone, Copy)]
pub struct Centralized;

impl TrainingMode for Centralized {
    fn name(&self) -> &str {
        "CENTRALIZED"
    }

    fn fit(&self, train: &Dataset, loss: &dyn Loss, req: &FitRequest<'_>) -> Result<Fit> {
        let cfg = OptimizerConfig {
            epochs: req.optimizer.epochs * req.rounds,
            seed: req.seed,
            ..req.optimizer.clone()
        };
        let result = minimize(train, loss, req.lambda, None, Weights::zeros(train.dim()), &cfg)?;
        Ok(Fit {
            weights: result.weights,
            rounds_run: 1,
            num_sites: 1,
            partition: "none".to_string(),
            converged: result.converged,
        })
    }
}

fn federated_fit(train: &Dataset, loss: &dyn Loss, req: &FitRequest<'_>, privacy: Option<PrivacyParams>) -> Result<Fit> {
    let cfg = FederationConfig {
        num_sites: req.num_sites,
        rounds: req.rounds,
        partition: req.partition.clone(),
        optimizer: req.optimizer.clone(),
        privacy,
        master_seed: req.seed,
    };
    let outcome = run_federation(train, loss, req.lambda, &cfg)?;
    Ok(Fit {
        weights: outcome.weights,
        rounds_run: outcome.rounds.len(),
        num_sites: req.num_sites,
        partition: req.partition.name(),
        converged: outcome.stop == StopReason::Converged,
    })
}

/// Non-private federated averaging.
#[derive(Debug, Clone, Copy)]
pub struct Federated;

impl TrainingMode for Federated {
    fn name(&self) -> &str {
        "FEDERATED"
    }

    fn fit(&self, train: &Dataset, loss: &dyn Loss, req: &FitRequest<'_>) -> Result<Fit> {
        federated_fit(train, loss, req, None)
    }
}

/// Federated averaging with every site perturbing its local objective.
#[derive(Debug, Clone, Copy)]
pub struct FederatedDp;

impl TrainingMode for FederatedDp {
    fn name(&self) -> &str {
        "FEDERATED_DP"
    }

    fn private(&self) -> bool {
        true
    }

    fn fit(&self, train: &Dataset, loss: &dyn Loss, req: &FitRequest<'_>) -> Result<Fit> {
        let epsilon = req
            .epsilon
            .ok_or_else(|| Error::Config("FEDERATED_DP needs an epsilon".into()))?;
        let params = PrivacyParams::new(epsilon, req.lambda)?;
        federated_fit(train, loss, req, Some(params))
    }
}

/// Name → mode table. Lookup ignores case and treats `-` and `_` alike.
#[derive(Clone)]
pub struct ModeRegistry {
    modes: BTreeMap<String, ModeKind>,
    order: Vec<String>,
}

fn normalize(name: &str) -> String {
    name.trim().to_ascii_uppercase().replace('-', "_")
}

impl ModeRegistry {
    pub fn empty() -> Self {
        ModeRegistry {
            modes: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    pub fn register(&mut self, mode: ModeKind) {
        let key = normalize(mode.name());
        if self.modes.insert(key.clone(), mode).is_none() {
            self.order.push(key);
        }
    }

    pub fn resolve(&self, name: &str) -> Result<ModeKind> {
        self.modes
            .get(&normalize(name))
            .cloned()
            .ok_or_else(|| Error::UnknownName {
                kind: "mode",
                name: name.to_string(),
                known: self.order.join(", "),
            })
    }

    /// Every registered mode, in registration order.
    pub fn all(&self) -> Vec<ModeKind> {
        self.order.iter().map(|k| self.modes[k].clone()).collect()
    }
}

impl Default for ModeRegistry {
    fn default() -> Self {
        let mut r = ModeRegistry::empty();
        r.register(Arc::new(Centralized));
        r.register(Arc::new(Federated));
        r.register(Arc::new(FederatedDp));
        r
    }
}

impl fmt::Debug for ModeRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.order).finish()
    }
}
