//! Experiment configuration.
//!
//! Configuration is a flat `key=value` map whose keys are the CLI flag names.
//! Files are parsed into the same map the flags fill in, flags override file
//! entries, and unknown keys are rejected.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use super::modes::{ModeKind, ModeRegistry};
use crate::data::{named_cohort, SyntheticSpec, DEFAULT_LABEL_COLUMN};
use crate::error::{Error, Result};
use crate::federation::{IidEqual, PartitionKind, PartitionRegistry};
use crate::models::{Logistic, LossKind, LossRegistry};
use crate::optimizer::{BatchSize, OptimizerConfig};

pub const DEFAULT_EPSILON_GRID: [f64; 7] = [0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5];
pub const DEFAULT_LAMBDA: f64 = 1e-4;
pub const DEFAULT_COHORT: &str = "separable";

/// Every key a config file or the command line may set.
pub const KNOWN_KEYS: [&str; 19] = [
    "data",
    "synthetic",
    "label-column",
    "modes",
    "loss",
    "epsilon-grid",
    "sites",
    "rounds",
    "partition",
    "lambda",
    "learning-rate",
    "epochs",
    "batch-size",
    "tolerance",
    "seeds",
    "folds",
    "train-fraction",
    "synthetic-n",
    "out",
];

#[derive(Debug, Clone, PartialEq)]
pub enum DataSource {
    Csv { path: PathBuf, label_column: String },
    Synthetic { name: String, spec: SyntheticSpec },
}

impl DataSource {
    fn describe(&self) -> String {
        match self {
            DataSource::Csv { path, label_column } => {
                format!("csv:{}#{}", path.display(), label_column)
            }
            DataSource::Synthetic { name, spec } => format!(
                "synthetic:{name}(n={},dim={},positive_rate={},separation={},noise={},seed={})",
                spec.n, spec.dim, spec.positive_rate, spec.class_separation, spec.noise_scale, spec.seed
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub source: DataSource,
    pub losses: Vec<LossKind>,
    pub lambda: f64,
    pub epsilon_grid: Vec<f64>,
    pub modes: Vec<ModeKind>,
    pub num_sites: usize,
    /// Round cap for federated modes; centralized training gets
    /// `rounds × epochs` epochs so every mode has the same epoch budget.
    pub rounds: usize,
    pub partition: PartitionKind,
    /// Per-round (federated) optimizer settings; the seed field is unused,
    /// run seeds are derived from `seeds`.
    pub optimizer: OptimizerConfig,
    pub seeds: Vec<u64>,
    /// 0 disables cross-validation and only the held-out row is produced.
    pub cv_folds: usize,
    pub train_fraction: f64,
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            source: DataSource::Synthetic {
                name: DEFAULT_COHORT.to_string(),
                spec: named_cohort(DEFAULT_COHORT).expect("built-in cohort"),
            },
            losses: vec![Arc::new(Logistic)],
            lambda: DEFAULT_LAMBDA,
            epsilon_grid: DEFAULT_EPSILON_GRID.to_vec(),
            modes: ModeRegistry::default().all(),
            num_sites: 10,
            rounds: 10,
            partition: Arc::new(IidEqual),
            optimizer: OptimizerConfig::default(),
            seeds: vec![0],
            cv_folds: 5,
            train_fraction: 0.7,
            output: None,
        }
    }
}

/// Parses `key=value` lines. Blank lines and `#` comments are skipped.
pub fn parse_settings(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key=value, got `{line}`", i + 1)))?;
        let key = key.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::Config(format!("line {}: unknown key `{key}`", i + 1)));
        }
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(Error::Config(format!("line {}: duplicate key `{key}`", i + 1)));
        }
    }
    Ok(map)
}

pub fn read_settings(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_settings(&text).map_err(|e| e.context(format!("config file {}", path.display())))
}

fn parse<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::Config(format!("`{key}`: cannot parse `{v}`")))
}

fn parse_list<T: std::str::FromStr>(key: &str, v: &str) -> Result<Vec<T>> {
    let items: Vec<T> = v
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(key, s))
        .collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(Error::Config(format!("`{key}`: empty list")));
    }
    Ok(items)
}

impl ExperimentConfig {
    /// Builds a config from settings over the defaults, resolving names
    /// through the given registries.
    pub fn from_settings(
        settings: &BTreeMap<String, String>,
        losses: &LossRegistry,
        modes: &ModeRegistry,
        partitions: &PartitionRegistry,
    ) -> Result<Self> {
        if let Some(key) = settings.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(Error::Config(format!("unknown key `{key}`")));
        }
        let get = |k: &str| settings.get(k).map(String::as_str);
        let mut cfg = ExperimentConfig::default();

        match (get("data"), get("synthetic")) {
            (Some(_), Some(_)) => {
                return Err(Error::Config("`data` and `synthetic` are mutually exclusive".into()))
            }
            (Some(path), None) => {
                cfg.source = DataSource::Csv {
                    path: PathBuf::from(path),
                    label_column: get("label-column").unwrap_or(DEFAULT_LABEL_COLUMN).to_string(),
                }
            }
            (None, name) => {
                let name = name.unwrap_or(DEFAULT_COHORT);
                let mut spec = named_cohort(name)?;
                if let Some(n) = get("synthetic-n") {
                    spec.n = parse("synthetic-n", n)?;
                }
                cfg.source = DataSource::Synthetic {
                    name: name.to_ascii_lowercase(),
                    spec,
                };
            }
        }
        if get("synthetic-n").is_some() && get("data").is_some() {
            return Err(Error::Config("`synthetic-n` only applies to synthetic data".into()));
        }
        if get("label-column").is_some() && get("data").is_none() {
            return Err(Error::Config("`label-column` only applies to --data".into()));
        }

        if let Some(v) = get("loss") {
            cfg.losses = v
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| losses.resolve(s))
                .collect::<Result<_>>()?;
        }
        if let Some(v) = get("modes") {
            cfg.modes = v
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| modes.resolve(s))
                .collect::<Result<_>>()?;
        }
        if let Some(v) = get("partition") {
            cfg.partition = partitions.resolve(v)?;
        }
        if let Some(v) = get("epsilon-grid") {
            cfg.epsilon_grid = parse_list("epsilon-grid", v)?;
        }
        if let Some(v) = get("seeds") {
            cfg.seeds = parse_list("seeds", v)?;
        }
        if let Some(v) = get("sites") {
            cfg.num_sites = parse("sites", v)?;
        }
        if let Some(v) = get("rounds") {
            cfg.rounds = parse("rounds", v)?;
        }
        if let Some(v) = get("lambda") {
            cfg.lambda = parse("lambda", v)?;
        }
        if let Some(v) = get("learning-rate") {
            cfg.optimizer.learning_rate = parse("learning-rate", v)?;
        }
        if let Some(v) = get("epochs") {
            cfg.optimizer.epochs = parse("epochs", v)?;
        }
        if let Some(v) = get("batch-size") {
            cfg.optimizer.batch_size = v.parse::<BatchSize>()?;
        }
        if let Some(v) = get("tolerance") {
            cfg.optimizer.tolerance = parse("tolerance", v)?;
        }
        if let Some(v) = get("folds") {
            cfg.cv_folds = parse("folds", v)?;
        }
        if let Some(v) = get("train-fraction") {
            cfg.train_fraction = parse("train-fraction", v)?;
        }
        cfg.output = get("out").map(PathBuf::from);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let cfg_err = |m: String| Err(Error::Config(m));
        if self.losses.is_empty() {
            return cfg_err("no loss selected".into());
        }
        if self.modes.is_empty() {
            return cfg_err("no mode selected".into());
        }
        if self.seeds.is_empty() {
            return cfg_err("no seeds given".into());
        }
        if self.modes.iter().any(|m| m.private()) && self.epsilon_grid.is_empty() {
            return cfg_err("private mode requested with an empty epsilon grid".into());
        }
        if let Some(e) = self.epsilon_grid.iter().find(|e| !(**e > 0.0 && e.is_finite())) {
            return cfg_err(format!("epsilon values must be positive, got {e}"));
        }
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return cfg_err(format!("lambda must be positive, got {}", self.lambda));
        }
        if self.num_sites == 0 || self.rounds == 0 {
            return cfg_err("sites and rounds must be at least 1".into());
        }
        if self.cv_folds == 1 {
            return cfg_err("folds must be 0 (disabled) or at least 2".into());
        }
        if !(self.train_fraction > 0.0 && self.train_fraction < 1.0) {
            return cfg_err(format!("train-fraction must lie in (0, 1), got {}", self.train_fraction));
        }
        let mut names: Vec<String> = self.modes.iter().map(|m| m.name().to_string()).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return cfg_err("duplicate mode".into());
        }
        self.optimizer.validate()
    }

    /// Stable text form of everything that influences results (the output
    /// path is excluded).
    pub fn canonical_text(&self) -> String {
        let join = |items: Vec<String>| items.join(",");
        let mut s = String::new();
        let _ = writeln!(s, "source={}", self.source.describe());
        let _ = writeln!(s, "loss={}", join(self.losses.iter().map(|l| l.name()).collect()));
        let _ = writeln!(s, "modes={}", join(self.modes.iter().map(|m| m.name().to_string()).collect()));
        let _ = writeln!(s, "epsilon-grid={}", join(self.epsilon_grid.iter().map(f64::to_string).collect()));
        let _ = writeln!(s, "lambda={}", self.lambda);
        let _ = writeln!(s, "sites={}", self.num_sites);
        let _ = writeln!(s, "rounds={}", self.rounds);
        let _ = writeln!(s, "partition={}", self.partition.name());
        let _ = writeln!(s, "learning-rate={}", self.optimizer.learning_rate);
        let _ = writeln!(s, "epochs={}", self.optimizer.epochs);
        let _ = writeln!(s, "batch-size={}", self.optimizer.batch_size);
        let _ = writeln!(s, "tolerance={}", self.optimizer.tolerance);
        let _ = writeln!(s, "seeds={}", join(self.seeds.iter().map(u64::to_string).collect()));
        let _ = writeln!(s, "folds={}", self.cv_folds);
        let _ = writeln!(s, "train-fraction={}", self.train_fraction);
        s
    }

    /// First 16 hex digits of the SHA-256 of [`Self::canonical_text`].
    pub fn config_hash(&self) -> String {
        let digest = Sha256::digest(self.canonical_text().as_bytes());
        hex::encode(&digest[..8])
    }
}
