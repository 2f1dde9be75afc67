use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const HOLDOUT_FOLD: &str = "holdout";

/// One trained-and-evaluated model. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub run_id: String,
    pub mode: String,
    pub loss_kind: String,
    /// Empty for non-private modes.
    pub epsilon: Option<f64>,
    pub num_sites: usize,
    pub partition_strategy: String,
    pub rounds_run: usize,
    /// Cross-validation fold index, or `holdout` for the held-out test split.
    pub fold: String,
    pub seed: u64,
    pub f1: f64,
    pub precision: f64,
    pub recall: f64,
    pub final_train_loss: f64,
    /// Wall-clock time; excluded from determinism checks.
    pub wall_ms: u64,
    pub config_hash: String,
}

impl ResultRow {
    pub fn is_holdout(&self) -> bool {
        self.fold == HOLDOUT_FOLD
    }
}

pub fn write_rows<W: io::Write, T: Serialize>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|source| Error::Csv {
            path: "<report>".into(),
            source,
        })?;
    }
    w.flush().map_err(|source| Error::Io {
        path: "<report>".into(),
        source,
    })
}

/// CSV text with a header row, even for an empty table.
pub fn to_csv_string<T: Serialize>(rows: &[T], header: &[&str]) -> Result<String> {
    let mut buf = Vec::new();
    if rows.is_empty() {
        buf.extend_from_slice(header.join(",").as_bytes());
        buf.push(b'\n');
    } else {
        write_rows(rows, &mut buf)?;
    }
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub const RESULT_COLUMNS: [&str; 15] = [
    "run_id",
    "mode",
    "loss_kind",
    "epsilon",
    "num_sites",
    "partition_strategy",
    "rounds_run",
    "fold",
    "seed",
    "f1",
    "precision",
    "recall",
    "final_train_loss",
    "wall_ms",
    "config_hash",
];

pub fn rows_to_csv(rows: &[ResultRow]) -> Result<String> {
    to_csv_string(rows, &RESULT_COLUMNS)
}

pub fn read_rows(path: &Path) -> Result<Vec<ResultRow>> {
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut r = csv::Reader::from_path(path).map_err(csv_err)?;
    r.deserialize().collect::<Result<Vec<ResultRow>, _>>().map_err(csv_err)
}

/// SHA-256 over the report with every `wall_ms` zeroed.
pub fn determinism_digest(rows: &[ResultRow]) -> Result<String> {
    let stripped: Vec<ResultRow> = rows
        .iter()
        .cloned()
        .map(|r| ResultRow { wall_ms: 0, ..r })
        .collect();
    Ok(hex::encode(Sha256::digest(rows_to_csv(&stripped)?.as_bytes())))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn row(mode: &str, eps: Option<f64>, seed: u64, fold: &str, f1: f64) -> ResultRow {
        ResultRow {
            run_id: format!("{mode}-{seed}"),
            mode: mode.into(),
            loss_kind: "logistic".into(),
            epsilon: eps,
            num_sites: 10,
            partition_strategy: "iid".into(),
            rounds_run: 3,
            fold: fold.into(),
            seed,
            f1,
            precision: f1,
            recall: f1,
            final_train_loss: 0.25,
            wall_ms: 12,
            config_hash: "abc".into(),
        }
    }

    #[test]
    fn csv_header_and_round_trip() {
        let rows = vec![
            row("CENTRALIZED", None, 1, "0", 0.5),
            row("FEDERATED_DP", Some(0.05), 1, HOLDOUT_FOLD, 0.25),
        ];
        let text = rows_to_csv(&rows).unwrap();
        assert_eq!(text.lines().next().unwrap(), RESULT_COLUMNS.join(","));
        assert!(text.lines().nth(1).unwrap().contains("CENTRALIZED,logistic,,10"));
        let f = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(f.path(), &text).unwrap();
        assert_eq!(read_rows(f.path()).unwrap(), rows);
        assert_eq!(rows_to_csv(&[]).unwrap(), RESULT_COLUMNS.join(",") + "\n");
    }

    #[test]
    fn digest_ignores_wall_clock() {
        let a = vec![row("FEDERATED", None, 1, "holdout", 0.5)];
        let mut b = a.clone();
        b[0].wall_ms = 999;
        assert_eq!(determinism_digest(&a).unwrap(), determinism_digest(&b).unwrap());
        b[0].f1 = 0.6;
        assert_ne!(determinism_digest(&a).unwrap(), determinism_digest(&b).unwrap());
    }
}
