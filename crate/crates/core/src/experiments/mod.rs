//! Experiment harness: centralized vs federated vs private federated training,
//! swept over seeds, losses and privacy budgets.
//!
//! For every (mode, loss, seed, ε) the data is split 70/30 with the seed,
//! k-fold cross-validation runs on the training portion (one row per fold),
//! and a final model trained on the whole training portion is scored on the
//! held-out 30% (the `holdout` row). Splits depend only on the seed, so all
//! modes are compared on identical data.

mod config;
mod modes;
mod report;
mod summary;

pub use config::{
    parse_settings, read_settings, DataSource, ExperimentConfig, DEFAULT_COHORT, DEFAULT_EPSILON_GRID,
    DEFAULT_LAMBDA, KNOWN_KEYS,
};
pub use modes::{Centralized, Federated, FederatedDp, Fit, FitRequest, ModeKind, ModeRegistry, TrainingMode};
pub use report::{
    determinism_digest, read_rows, rows_to_csv, to_csv_string, write_rows, ResultRow, HOLDOUT_FOLD,
    RESULT_COLUMNS,
};
pub use summary::{
    compare_modes, epsilon_sweep, mean_std, CompareRow, SweepRow, COMPARE_COLUMNS, SWEEP_COLUMNS,
};

use std::fmt::Write as _;
use std::time::Instant;

use crate::data::{generate_synthetic_table, kfold, load_csv, preprocess, train_test_split, PreprocessReport};
use crate::error::Result;
use crate::models::{evaluate, objective, Dataset, Loss};
use crate::seed::{self, tag};

/// Loads or generates the configured dataset and scales it into the unit ball.
pub fn load_dataset(source: &DataSource) -> Result<(Dataset, PreprocessReport)> {
    let table = match source {
        DataSource::Csv { path, label_column } => load_csv(path, label_column)?,
        DataSource::Synthetic { spec, .. } => generate_synthetic_table(spec)?,
    };
    preprocess(&table, true)
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    cfg.validate()?;
    let (data, _) = load_dataset(&cfg.source)?;
    run_on(cfg, &data)
}

struct Task<'a> {
    mode: &'a ModeKind,
    loss_index: usize,
    epsilon: Option<f64>,
    seed_index: usize,
}

/// Runs every task of `cfg` against an already prepared dataset. Rows come
/// back in canonical order: mode, loss, ε, seed, fold.
pub fn run_on(cfg: &ExperimentConfig, data: &Dataset) -> Result<Vec<ResultRow>> {
    cfg.validate()?;
    let hash = cfg.config_hash();
    let mut modes: Vec<&ModeKind> = cfg.modes.iter().collect();
    modes.sort_by(|a, b| a.name().cmp(b.name()));

    let mut tasks = Vec::new();
    for mode in modes {
        for loss_index in 0..cfg.losses.len() {
            let epsilons: Vec<Option<f64>> = if mode.private() {
                let mut grid = cfg.epsilon_grid.clone();
                grid.sort_by(f64::total_cmp);
                grid.dedup();
                grid.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            for epsilon in epsilons {
                for seed_index in 0..cfg.seeds.len() {
                    tasks.push(Task {
                        mode,
                        loss_index,
                        epsilon,
                        seed_index,
                    });
                }
            }
        }
    }

    let mut rows = Vec::new();
    for task in &tasks {
        let loss = cfg.losses[task.loss_index].as_ref();
        let seed = cfg.seeds[task.seed_index];
        let context = format!(
            "mode={} loss={} epsilon={} seed={}",
            task.mode.name(),
            loss.name(),
            task.epsilon.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
            seed
        );
        run_task(cfg, data, task, loss, seed, &hash, &mut rows).map_err(|e| e.context(context))?;
    }
    Ok(rows)
}

fn run_task(
    cfg: &ExperimentConfig,
    data: &Dataset,
    task: &Task<'_>,
    loss: &dyn Loss,
    seed: u64,
    hash: &str,
    rows: &mut Vec<ResultRow>,
) -> Result<()> {
    let (train, test) = train_test_split(data, cfg.train_fraction, seed)?;
    let run_id = format!(
        "{}/{}/{}/{}",
        task.mode.name(),
        loss.name(),
        task.epsilon.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
        seed
    );

    let mut evaluate_fold = |fold: String, fit_on: &Dataset, score_on: &Dataset, fold_tag: u64| -> Result<()> {
        let started = Instant::now();
        let request = FitRequest {
            lambda: cfg.lambda,
            epsilon: task.epsilon,
            num_sites: cfg.num_sites,
            rounds: cfg.rounds,
            partition: &cfg.partition,
            optimizer: &cfg.optimizer,
            seed: seed::derive(seed, &[tag::FEDERATION, fold_tag]),
        };
        let fit = task.mode.fit(fit_on, loss, &request)?;
        let confusion = evaluate(&fit.weights, score_on)?;
        let final_train_loss = objective(&fit.weights, fit_on, loss, cfg.lambda, None)?;
        rows.push(ResultRow {
            run_id: run_id.clone(),
            mode: task.mode.name().to_string(),
            loss_kind: loss.name(),
            epsilon: task.epsilon,
            num_sites: fit.num_sites,
            partition_strategy: fit.partition,
            rounds_run: fit.rounds_run,
            fold,
            seed,
            f1: confusion.f1(),
            precision: confusion.precision(),
            recall: confusion.recall(),
            final_train_loss,
            wall_ms: started.elapsed().as_millis() as u64,
            config_hash: hash.to_string(),
        });
        Ok(())
    };

    if cfg.cv_folds >= 2 {
        for (i, (fit_on, validate_on)) in kfold(&train, cfg.cv_folds, seed)?.iter().enumerate() {
            evaluate_fold(i.to_string(), fit_on, validate_on, i as u64)
                .map_err(|e| e.context(format!("fold {i}")))?;
        }
    }
    evaluate_fold(HOLDOUT_FOLD.to_string(), &train, &test, u64::MAX).map_err(|e| e.context("holdout"))
}

/// Sidecar text describing how a report was produced.
pub fn report_metadata(cfg: &ExperimentConfig, prep: &PreprocessReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "config_hash={}", cfg.config_hash());
    s.push_str(&cfg.canonical_text());
    let _ = writeln!(s, "scale_factor={}", prep.scale_factor);
    let _ = writeln!(s, "max_row_norm_before={}", prep.max_row_norm_before);
    let _ = writeln!(s, "bias_appended={}", prep.bias_appended);
    s.push_str(
        "note=features are scaled by one global factor computed on the pooled data before \
         partitioning; a real deployment would need the sites to agree on that factor\n",
    );
    s.push_str(
        "note=privacy budget is per site: each site draws its perturbation once and reuses it \
         every round; shards are disjoint, so every record is covered by epsilon\n",
    );
    s.push_str("note=centralized training runs rounds x epochs epochs\n");
    s.push_str("note=holdout rows score the model trained on the full training split; numbered folds are cross-validation\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::SyntheticSpec;
    use crate::federation::PartitionRegistry;
    use crate::models::LossRegistry;

    fn small_cfg(text: &str) -> ExperimentConfig {
        let settings = parse_settings(&format!("synthetic=separable\nsynthetic-n=400\nepochs=3\nrounds=2\nsites=3\n{text}")).unwrap();
        ExperimentConfig::from_settings(
            &settings,
            &LossRegistry::default(),
            &ModeRegistry::default(),
            &PartitionRegistry::default(),
        )
        .unwrap()
    }

    #[test]
    fn centralized_row_accounting() {
        let cfg = small_cfg("modes=centralized\nseeds=4");
        let rows = run_experiment(&cfg).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows.iter().filter(|r| r.is_holdout()).count(), 1);
        assert_eq!(
            rows.iter().map(|r| r.fold.as_str()).collect::<Vec<_>>(),
            ["0", "1", "2", "3", "4", HOLDOUT_FOLD]
        );
        assert!(rows.iter().all(|r| r.epsilon.is_none() && r.config_hash == cfg.config_hash()));
    }

    #[test]
    fn private_rows_follow_grid() {
        let cfg = small_cfg("modes=federated,federated-dp\nepsilon-grid=0.5,0.1,0.2,0.3,0.4\nseeds=1,2,3\nfolds=0");
        let rows = run_experiment(&cfg).unwrap();
        assert_eq!(rows.len(), 3 + 15);
        let eps: Vec<f64> = rows.iter().filter_map(|r| r.epsilon).collect();
        assert!(eps.windows(2).all(|w| w[0] <= w[1]));
        for r in &rows {
            assert!((0.0..=1.0).contains(&r.f1));
            assert!(r.rounds_run <= 2);
        }
    }

    #[test]
    fn errors_carry_run_context() {
        let mut cfg = small_cfg("modes=federated\nfolds=0");
        cfg.source = DataSource::Synthetic {
            name: "tiny".into(),
            spec: SyntheticSpec { n: 10, ..crate::data::named_cohort("separable").unwrap() },
        };
        cfg.num_sites = 50;
        let err = run_experiment(&cfg).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("mode=FEDERATED") && text.contains("seed=0"), "{text}");
    }

    #[test]
    fn metadata_mentions_choices() {
        let cfg = small_cfg("");
        let (_, prep) = load_dataset(&cfg.source).unwrap();
        let meta = report_metadata(&cfg, &prep);
        assert!(meta.starts_with(&format!("config_hash={}", cfg.config_hash())));
        assert!(meta.contains("per site"));
        assert!(meta.contains("global factor"));
    }
}
