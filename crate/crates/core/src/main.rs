use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fedpriv::data::{generate_synthetic_table, load_csv, named_cohort, preprocess, write_csv, DEFAULT_LABEL_COLUMN};
use fedpriv::experiments::{
    compare_modes, epsilon_sweep, load_dataset, read_rows, read_settings, report_metadata, rows_to_csv, run_on,
    to_csv_string, ExperimentConfig, ModeRegistry, ResultRow, COMPARE_COLUMNS, DEFAULT_LAMBDA, SWEEP_COLUMNS,
};
use fedpriv::federation::PartitionRegistry;
use fedpriv::models::LossRegistry;
use fedpriv::privacy::{validate_preconditions, PrivacyParams};
use fedpriv::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "fedpriv", version, about = "Federated learning with objective-perturbation differential privacy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Train and evaluate every configured run, writing one CSV row per model.
    Run(RunArgs),
    /// Mean/std held-out F1 of FEDERATED_DP per epsilon.
    Sweep(SummaryArgs),
    /// Mean/std held-out F1 per mode with the gap to CENTRALIZED.
    Compare(SummaryArgs),
    /// Write a synthetic cohort as CSV.
    GenData(GenDataArgs),
    /// Check the privacy preconditions on a CSV file.
    Validate(ValidateArgs),
}

/// Flags share their names with config-file keys; flags win.
#[derive(Args, Debug, Default)]
struct RunArgs {
    /// key=value config file
    #[arg(long)]
    config: Option<PathBuf>,
    /// CSV dataset
    #[arg(long, conflicts_with = "synthetic")]
    data: Option<String>,
    /// Built-in synthetic cohort: lced-like, mimic-like, separable
    #[arg(long)]
    synthetic: Option<String>,
    /// Override the cohort size
    #[arg(long)]
    synthetic_n: Option<String>,
    #[arg(long)]
    label_column: Option<String>,
    /// Comma list of centralized, federated, federated-dp
    #[arg(long)]
    modes: Option<String>,
    /// Comma list of logistic, svm[:h], perceptron[:h]
    #[arg(long)]
    loss: Option<String>,
    #[arg(long)]
    epsilon_grid: Option<String>,
    #[arg(long)]
    sites: Option<String>,
    #[arg(long)]
    rounds: Option<String>,
    /// iid or skewed:<alpha>
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    learning_rate: Option<String>,
    #[arg(long)]
    epochs: Option<String>,
    /// Positive integer or `all`
    #[arg(long)]
    batch_size: Option<String>,
    #[arg(long)]
    tolerance: Option<String>,
    #[arg(long)]
    seeds: Option<String>,
    /// Cross-validation folds; 0 disables cross-validation
    #[arg(long)]
    folds: Option<String>,
    #[arg(long)]
    train_fraction: Option<String>,
    /// Output CSV (stdout when absent)
    #[arg(long)]
    out: Option<String>,
}

impl RunArgs {
    fn settings(&self) -> Result<BTreeMap<String, String>> {
        let mut map = match &self.config {
            Some(path) => read_settings(path)?,
            None => BTreeMap::new(),
        };
        let flags = [
            ("data", &self.data),
            ("synthetic", &self.synthetic),
            ("synthetic-n", &self.synthetic_n),
            ("label-column", &self.label_column),
            ("modes", &self.modes),
            ("loss", &self.loss),
            ("epsilon-grid", &self.epsilon_grid),
            ("sites", &self.sites),
            ("rounds", &self.rounds),
            ("partition", &self.partition),
            ("lambda", &self.lambda),
            ("learning-rate", &self.learning_rate),
            ("epochs", &self.epochs),
            ("batch-size", &self.batch_size),
            ("tolerance", &self.tolerance),
            ("seeds", &self.seeds),
            ("folds", &self.folds),
            ("train-fraction", &self.train_fraction),
            ("out", &self.out),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                if key == "data" {
                    map.remove("synthetic");
                } else if key == "synthetic" {
                    map.remove("data");
                }
                map.insert(key.to_string(), v.clone());
            }
        }
        Ok(map)
    }

    fn config(&self, default_modes: Option<&str>) -> Result<ExperimentConfig> {
        let mut settings = self.settings()?;
        if let Some(modes) = default_modes {
            settings.entry("modes".into()).or_insert_with(|| modes.to_string());
        }
        ExperimentConfig::from_settings(
            &settings,
            &LossRegistry::default(),
            &ModeRegistry::default(),
            &PartitionRegistry::default(),
        )
    }
}

#[derive(Args, Debug)]
struct SummaryArgs {
    /// Summarize an existing `run` report instead of running the experiment
    #[arg(long)]
    results: Option<PathBuf>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct GenDataArgs {
    #[arg(long, default_value = "separable")]
    synthetic: String,
    #[arg(long)]
    synthetic_n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    data: PathBuf,
    #[arg(long, default_value = DEFAULT_LABEL_COLUMN)]
    label_column: String,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long, default_value = "logistic")]
    loss: String,
    /// Check the data after bias append and unit-ball scaling
    #[arg(long)]
    preprocess: bool,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn execute(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    let (data, prep) = load_dataset(&cfg.source)?;
    let rows = run_on(cfg, &data)?;
    if let Some(out) = &cfg.output {
        let meta = PathBuf::from(format!("{}.meta.txt", out.display()));
        emit(&report_metadata(cfg, &prep), Some(&meta))?;
    }
    Ok(rows)
}

fn summary_rows(args: &SummaryArgs, default_modes: Option<&str>) -> Result<(Vec<ResultRow>, Option<PathBuf>)> {
    match &args.results {
        Some(path) => Ok((read_rows(path)?, args.run.out.as_ref().map(PathBuf::from))),
        None => {
            let cfg = args.run.config(default_modes)?;
            // The summary, not the per-model rows, goes to --out.
            let mut quiet = cfg.clone();
            quiet.output = None;
            Ok((execute(&quiet)?, cfg.output))
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(args) => {
            let cfg = args.config(None)?;
            let rows = execute(&cfg)?;
            emit(&rows_to_csv(&rows)?, cfg.output.as_deref())?;
            if let Some(out) = &cfg.output {
                eprintln!("wrote {} rows to {}", rows.len(), out.display());
            }
        }
        Command::Sweep(args) => {
            let (rows, out) = summary_rows(&args, Some("federated-dp"))?;
            emit(&to_csv_string(&epsilon_sweep(&rows)?, &SWEEP_COLUMNS)?, out.as_deref())?;
        }
        Command::Compare(args) => {
            let (rows, out) = summary_rows(&args, None)?;
            let table = compare_modes(&rows)?;
            for w in table.iter().filter(|r| r.mode == "WARNING") {
                eprintln!("warning: {}: {}", w.loss_kind, w.note);
            }
            emit(&to_csv_string(&table, &COMPARE_COLUMNS)?, out.as_deref())?;
        }
        Command::GenData(args) => {
            let mut spec = named_cohort(&args.synthetic)?;
            if let Some(n) = args.synthetic_n {
                spec.n = n;
            }
            if let Some(seed) = args.seed {
                spec.seed = seed;
            }
            write_csv(&generate_synthetic_table(&spec)?, &args.out)?;
            eprintln!("wrote {} rows to {}", spec.n, args.out.display());
        }
        Command::Validate(args) => {
            let loss = LossRegistry::default().resolve(&args.loss)?;
            let table = load_csv(&args.data, &args.label_column)?;
            let data = if args.preprocess {
                preprocess(&table, true)?.0
            } else {
                table.to_dataset(false)?
            };
            let params = PrivacyParams {
                epsilon: args.epsilon,
                lambda: args.lambda,
            };
            let report = validate_preconditions(&data, &params, loss.as_ref());
            println!("{report}");
            if !report.passed() {
                return Err(Error::Preconditions(format!(
                    "{} violation(s) in {}",
                    report.violations.len(),
                    args.data.display()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
