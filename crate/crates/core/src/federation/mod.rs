//! In-process federated training.
//!
//! Each round the aggregator broadcasts the global weights, every site runs
//! local gradient descent on its own shard, and the aggregator replaces the
//! global model with the sample-count-weighted average of the site weights.
//! Sites only ever exchange [`Broadcast`] and [`SiteUpdate`] values.

mod partition;

pub use partition::{
    partition_with, IidEqual, PartitionBuilder, PartitionKind, PartitionRegistry, Partitioner,
    SizeSkewed,
};
pub(crate) use partition::balanced_sizes;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::models::{objective, Dataset, Loss, Weights};
use crate::optimizer::{has_converged, minimize, OptimizerConfig};
use crate::privacy::{make_perturbation, validate_preconditions, PerturbationVector, PrivacyParams};
use crate::seed::{self, tag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteId(pub usize);

impl fmt::Display for SiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Site {
    pub id: SiteId,
    pub shard: Dataset,
    /// Drawn once per federation and reused every round.
    pub perturbation: Option<PerturbationVector>,
}

/// Aggregator → site message.
#[derive(Debug, Clone, PartialEq)]
pub struct Broadcast {
    pub round: usize,
    pub weights: Weights,
}

/// Site → aggregator message.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteUpdate {
    pub weights: Weights,
    pub sample_count: usize,
    pub site: SiteId,
    /// Final value of the site's local (possibly perturbed) objective.
    pub local_loss: f64,
}

#[derive(Debug, Clone)]
pub struct FederationConfig {
    pub num_sites: usize,
    /// Round cap.
    pub rounds: usize,
    pub partition: PartitionKind,
    pub optimizer: OptimizerConfig,
    pub privacy: Option<PrivacyParams>,
    pub master_seed: u64,
}

impl Default for FederationConfig {
    fn default() -> Self {
        FederationConfig {
            num_sites: 10,
            rounds: 10,
            partition: Arc::new(IidEqual),
            optimizer: OptimizerConfig::default(),
            privacy: None,
            master_seed: 0,
        }
    }
}

impl FederationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_sites == 0 {
            return Err(Error::invalid("sites", "must be at least 1"));
        }
        if self.rounds == 0 {
            return Err(Error::invalid("rounds", "must be at least 1"));
        }
        if let Some(p) = &self.privacy {
            PrivacyParams::new(p.epsilon, p.lambda)?;
        }
        self.optimizer.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundLog {
    pub round: usize,
    pub global_weights: Weights,
    /// Unperturbed objective of the global model on the union of all shards.
    pub global_train_loss: f64,
    pub per_site_losses: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    RoundCap,
    Converged,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FederationOutcome {
    pub weights: Weights,
    pub rounds: Vec<RoundLog>,
    pub stop: StopReason,
}

pub fn partition(data: &Dataset, cfg: &FederationConfig) -> Result<Vec<Dataset>> {
    partition_with(data, cfg.partition.as_ref(), cfg.num_sites, cfg.master_seed)
}

/// Runs the site's optimizer on its local objective starting from `global_w`.
pub fn local_train(
    site: &Site,
    global_w: &Weights,
    loss: &dyn Loss,
    lambda: f64,
    cfg: &OptimizerConfig,
) -> Result<SiteUpdate> {
    let tag_site = |e: Error| match e {
        Error::Diverged { epoch, .. } => Error::Diverged {
            epoch,
            site: Some(site.id.0),
        },
        other => other.context(format!("site {}", site.id)),
    };
    let perturb = site.perturbation.as_ref();
    let result = minimize(&site.shard, loss, lambda, perturb, global_w.clone(), cfg).map_err(tag_site)?;
    let local_loss = match result.loss_history.last() {
        Some(&l) => l,
        None => objective(&result.weights, &site.shard, loss, lambda, perturb).map_err(tag_site)?,
    };
    Ok(SiteUpdate {
        weights: result.weights,
        sample_count: site.shard.len(),
        site: site.id,
        local_loss,
    })
}

fn canonical_order(updates: &[SiteUpdate]) -> Result<Vec<&SiteUpdate>> {
    if updates.is_empty() {
        return Err(Error::EmptyInput("site updates"));
    }
    let mut sorted: Vec<&SiteUpdate> = updates.iter().collect();
    sorted.sort_by_key(|u| u.site);
    for pair in sorted.windows(2) {
        if pair[0].site == pair[1].site {
            return Err(Error::DuplicateSite(pair[0].site.0));
        }
    }
    let dim = sorted[0].weights.dim();
    if let Some(bad) = sorted.iter().find(|u| u.weights.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: bad.weights.dim(),
        });
    }
    if let Some(bad) = sorted.iter().find(|u| u.sample_count == 0) {
        return Err(Error::invalid("sample_count", format!("site {} reported zero samples", bad.site)));
    }
    Ok(sorted)
}

/// nᵢ / Σⱼ nⱼ for each update, in ascending site order.
pub fn aggregation_weights(updates: &[SiteUpdate]) -> Result<Vec<(SiteId, f64)>> {
    let sorted = canonical_order(updates)?;
    let total: usize = sorted.iter().map(|u| u.sample_count).sum();
    Ok(sorted
        .iter()
        .map(|u| (u.site, u.sample_count as f64 / total as f64))
        .collect())
}

/// Sample-count-weighted average of the site weights, reduced in ascending
/// site order so the result does not depend on arrival order.
pub fn aggregate(updates: &[SiteUpdate]) -> Result<Weights> {
    let shares = aggregation_weights(updates)?;
    let sorted = canonical_order(updates)?;
    let mut acc: Vec<f64> = sorted[0].weights.iter().map(|w| shares[0].1 * w).collect();
    for (u, (_, share)) in sorted.iter().zip(&shares).skip(1) {
        for (a, w) in acc.iter_mut().zip(u.weights.iter()) {
            *a += share * w;
        }
    }
    Ok(Weights::from(acc))
}

/// Partitions `data` and sets up the sites, drawing each site's perturbation
/// when privacy is configured.
pub fn build_sites(data: &Dataset, loss: &dyn Loss, cfg: &FederationConfig) -> Result<Vec<Site>> {
    let shards = partition(data, cfg)?;
    shards
        .into_iter()
        .enumerate()
        .map(|(i, shard)| {
            let perturbation = match &cfg.privacy {
                None => None,
                Some(params) => {
                    validate_preconditions(&shard, params, loss)
                        .into_result()
                        .map_err(|e| e.context(format!("site {i}")))?;
                    let noise_seed = seed::derive(cfg.master_seed, &[tag::NOISE, i as u64]);
                    Some(make_perturbation(*params, loss, shard.len(), shard.dim(), noise_seed)?)
                }
            };
            Ok(Site {
                id: SiteId(i),
                shard,
                perturbation,
            })
        })
        .collect()
}

pub fn run_federation(
    data: &Dataset,
    loss: &dyn Loss,
    lambda: f64,
    cfg: &FederationConfig,
) -> Result<FederationOutcome> {
    cfg.validate()?;
    data.require_non_empty()?;
    let sites = build_sites(data, loss, cfg)?;
    let mut broadcast = Broadcast {
        round: 0,
        weights: Weights::zeros(data.dim()),
    };
    let mut logs: Vec<RoundLog> = Vec::with_capacity(cfg.rounds);
    let mut global_losses = Vec::with_capacity(cfg.rounds);
    let mut stop = StopReason::RoundCap;

    for round in 0..cfg.rounds {
        broadcast.round = round;
        let updates = sites
            .iter()
            .map(|site| {
                let local = OptimizerConfig {
                    seed: seed::derive(cfg.master_seed, &[tag::OPTIMIZER, site.id.0 as u64, round as u64]),
                    ..cfg.optimizer.clone()
                };
                local_train(site, &broadcast.weights, loss, lambda, &local)
            })
            .collect::<Result<Vec<_>>>()?;
        let global = aggregate(&updates)?;
        let global_loss = objective(&global, data, loss, lambda, None)?;
        if !global_loss.is_finite() {
            return Err(Error::Diverged { epoch: round, site: None }.context("global model"));
        }
        global_losses.push(global_loss);
        logs.push(RoundLog {
            round,
            global_weights: global.clone(),
            global_train_loss: global_loss,
            per_site_losses: updates.iter().map(|u| u.local_loss).collect(),
        });
        broadcast.weights = global;
        if has_converged(&global_losses, cfg.optimizer.tolerance) {
            stop = StopReason::Converged;
            break;
        }
    }

    Ok(FederationOutcome {
        weights: broadcast.weights,
        rounds: logs,
        stop,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{Label, Logistic};
    use crate::optimizer::BatchSize;

    fn update(site: usize, n: usize, w: Vec<f64>) -> SiteUpdate {
        SiteUpdate {
            weights: Weights::from(w),
            sample_count: n,
            site: SiteId(site),
            local_loss: 0.0,
        }
    }

    fn toy(n: usize) -> Dataset {
        let mut feats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            let t = i as f64 / n as f64;
            let y = if i % 3 == 0 { -1.0 } else { 1.0 };
            feats.extend([0.5 * y + 0.2 * t - 0.1, 0.3 * (1.0 - t), 0.5]);
            labels.push(Label::from_value(y).unwrap());
        }
        Dataset::new(3, feats, labels).unwrap()
    }

    #[test]
    fn aggregate_examples() {
        let same = vec![update(0, 3, vec![1.5, -2.0]), update(1, 9, vec![1.5, -2.0])];
        let w = aggregate(&same).unwrap();
        assert!((w[0] - 1.5).abs() < 1e-12 && (w[1] + 2.0).abs() < 1e-12);

        let w = aggregate(&[update(0, 5, vec![0.0, 2.0]), update(1, 5, vec![2.0, 0.0])]).unwrap();
        assert_eq!(w.as_slice(), &[1.0, 1.0]);

        let w = aggregate(&[update(0, 100, vec![1.0, 1.0]), update(1, 300, vec![5.0, 5.0])]).unwrap();
        assert_eq!(w.as_slice(), &[4.0, 4.0]);
    }

    #[test]
    fn aggregate_errors() {
        assert!(matches!(aggregate(&[]).unwrap_err(), Error::EmptyInput(_)));
        assert!(matches!(
            aggregate(&[update(1, 1, vec![0.0]), update(1, 2, vec![1.0])]).unwrap_err(),
            Error::DuplicateSite(1)
        ));
        assert!(matches!(
            aggregate(&[update(0, 1, vec![0.0]), update(1, 2, vec![1.0, 2.0])]).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn aggregate_is_order_independent() {
        let ups = vec![
            update(2, 17, vec![0.1, 0.7, -3.0]),
            update(0, 5, vec![1.3, -0.2, 0.9]),
            update(1, 31, vec![-0.4, 0.05, 2.2]),
        ];
        let a = aggregate(&ups).unwrap();
        let mut rev = ups.clone();
        rev.reverse();
        assert_eq!(a, aggregate(&rev).unwrap());
        let shares = aggregation_weights(&ups).unwrap();
        assert_eq!(shares.iter().map(|s| s.0 .0).collect::<Vec<_>>(), [0, 1, 2]);
        assert!((shares.iter().map(|s| s.1).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn local_train_zero_epochs_returns_global() {
        let site = Site { id: SiteId(3), shard: toy(12), perturbation: None };
        let g = Weights::from(vec![0.2, -0.1, 0.4]);
        let cfg = OptimizerConfig { epochs: 0, ..Default::default() };
        let up = local_train(&site, &g, &Logistic, 0.01, &cfg).unwrap();
        assert_eq!(up.weights, g);
        assert_eq!(up.sample_count, 12);
        assert_eq!(up.site, SiteId(3));
    }

    #[test]
    fn perturbation_changes_update() {
        let shard = toy(40);
        let p = make_perturbation(PrivacyParams::new(0.5, 0.01).unwrap(), &Logistic, 40, 3, 8).unwrap();
        let plain = Site { id: SiteId(0), shard: shard.clone(), perturbation: None };
        let noisy = Site { id: SiteId(0), shard, perturbation: Some(p) };
        let cfg = OptimizerConfig { epochs: 5, ..Default::default() };
        let g = Weights::zeros(3);
        let a = local_train(&plain, &g, &Logistic, 0.01, &cfg).unwrap();
        let b = local_train(&noisy, &g, &Logistic, 0.01, &cfg).unwrap();
        assert_ne!(a.weights, b.weights);
    }

    #[test]
    fn divergence_is_tagged_with_site() {
        let site = Site { id: SiteId(4), shard: toy(10), perturbation: None };
        let cfg = OptimizerConfig { learning_rate: 1e300, epochs: 3, batch_size: BatchSize::All, ..Default::default() };
        let err = local_train(&site, &Weights::from(vec![1.0; 3]), &Logistic, 5.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::Diverged { site: Some(4), .. }), "{err:?}");
    }

    #[test]
    fn one_round_zero_epochs_is_zero() {
        let cfg = FederationConfig {
            num_sites: 3,
            rounds: 1,
            optimizer: OptimizerConfig { epochs: 0, ..Default::default() },
            ..Default::default()
        };
        let out = run_federation(&toy(30), &Logistic, 0.01, &cfg).unwrap();
        assert_eq!(out.weights, Weights::zeros(3));
        assert_eq!(out.rounds.len(), 1);
        assert_eq!(out.rounds[0].per_site_losses.len(), 3);
    }

    #[test]
    fn deterministic_round_logs() {
        let cfg = FederationConfig {
            num_sites: 4,
            rounds: 3,
            privacy: Some(PrivacyParams::new(0.3, 0.01).unwrap()),
            master_seed: 77,
            optimizer: OptimizerConfig { epochs: 3, batch_size: BatchSize::Fixed(4), ..Default::default() },
            ..Default::default()
        };
        let data = toy(60);
        let scale = data.max_row_norm();
        let scaled = Dataset::new(
            3,
            data.iter().flat_map(|(x, _)| x.iter().map(|v| v / scale).collect::<Vec<_>>()).collect(),
            data.labels().to_vec(),
        )
        .unwrap();
        let a = run_federation(&scaled, &Logistic, 0.01, &cfg).unwrap();
        let b = run_federation(&scaled, &Logistic, 0.01, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.rounds.len() <= 3);
    }

    #[test]
    fn privacy_requires_unit_ball() {
        let cfg = FederationConfig {
            num_sites: 2,
            privacy: Some(PrivacyParams::new(0.3, 0.01).unwrap()),
            ..Default::default()
        };
        let d = Dataset::new(1, vec![2.0, 0.5, 0.1, 0.3], vec![Label::Positive; 4]).unwrap();
        let err = run_federation(&d, &Logistic, 0.01, &cfg).unwrap_err();
        assert!(matches!(err.root(), Error::Preconditions(_)), "{err:?}");
    }
}
