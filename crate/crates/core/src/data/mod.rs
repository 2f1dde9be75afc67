//! Tabular ingestion and preprocessing.

mod split;
mod synthetic;

pub use split::{kfold, train_test_split};
pub use synthetic::{generate_synthetic, generate_synthetic_table, named_cohort, SyntheticSpec, COHORTS};

use std::path::Path;

use crate::error::{Error, Result};
use crate::models::{Dataset, Label};
use crate::privacy::NORM_TOLERANCE;

pub const DEFAULT_LABEL_COLUMN: &str = "label";

/// A numeric table as read from disk: feature columns plus one label column.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTable {
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<Label>,
    pub label_column: String,
}

impl RawTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The table as a dataset, unscaled, optionally with a constant-1 bias
    /// feature appended.
    pub fn to_dataset(&self, append_bias: bool) -> Result<Dataset> {
        let dim = self.feature_names.len() + usize::from(append_bias);
        if dim == 0 {
            return Err(Error::invalid("features", "table has no feature columns"));
        }
        let mut features = Vec::with_capacity(dim * self.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.feature_names.len() {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: self.feature_names.len() + 1,
                    found: row.len() + 1,
                });
            }
            features.extend_from_slice(row);
            if append_bias {
                features.push(1.0);
            }
        }
        Dataset::new(dim, features, self.labels.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreprocessReport {
    pub scale_factor: f64,
    pub max_row_norm_before: f64,
    pub bias_appended: bool,
}

/// Reads a headed, comma-separated numeric table. Labels may be -1/+1 or 0/1.
///
/// Row numbers in errors count data rows from 1 (the header is row 0).
pub fn load_csv(path: impl AsRef<Path>, label_column: &str) -> Result<RawTable> {
    let path = path.as_ref();
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => match e.into_kind() {
                csv::ErrorKind::Io(source) => Error::Io {
                    path: path.to_path_buf(),
                    source,
                },
                _ => unreachable!(),
            },
            _ => csv_err(e),
        })?;
    let header: Vec<String> = reader.headers().map_err(csv_err)?.iter().map(str::to_string).collect();
    let label_idx = header
        .iter()
        .position(|h| h == label_column)
        .ok_or_else(|| Error::MissingColumn(label_column.to_string()))?;

    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(csv_err)?;
        if record.len() != header.len() {
            return Err(Error::RaggedRow {
                row,
                expected: header.len(),
                found: record.len(),
            });
        }
        let mut values = Vec::with_capacity(header.len() - 1);
        for (j, cell) in record.iter().enumerate() {
            let parsed = cell.parse::<f64>().ok().filter(|v| v.is_finite());
            if j == label_idx {
                let label = parsed.and_then(Label::from_value).ok_or_else(|| Error::UnknownLabel {
                    row,
                    value: cell.to_string(),
                })?;
                labels.push(label);
            } else {
                values.push(parsed.ok_or_else(|| Error::NonNumeric {
                    row,
                    column: header[j].clone(),
                    value: cell.to_string(),
                })?);
            }
        }
        rows.push(values);
    }

    let feature_names = header
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != label_idx)
        .map(|(_, h)| h.clone())
        .collect();
    Ok(RawTable {
        feature_names,
        rows,
        labels,
        label_column: label_column.to_string(),
    })
}

/// Writes `table` in the format [`load_csv`] reads, label column last.
pub fn write_csv(table: &RawTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    let mut header = table.feature_names.clone();
    header.push(table.label_column.clone());
    w.write_record(&header).map_err(csv_err)?;
    for (row, label) in table.rows.iter().zip(&table.labels) {
        let mut rec: Vec<String> = row.iter().map(f64::to_string).collect();
        rec.push(label.to_string());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Divides every row by s = max(1, max row norm), so all rows lie in the unit
/// ball. Rows already within tolerance of the ball leave s at 1, which makes
/// the operation idempotent.
pub fn scale_to_unit_ball(data: &Dataset) -> (Dataset, PreprocessReport) {
    let max_norm = data.max_row_norm();
    let scale = if max_norm <= NORM_TOLERANCE { 1.0 } else { max_norm };
    let scaled = if scale == 1.0 {
        data.clone()
    } else {
        let features = data.iter().flat_map(|(x, _)| x.iter().map(move |v| v / scale)).collect();
        Dataset::new(data.dim(), features, data.labels().to_vec()).expect("same shape")
    };
    (
        scaled,
        PreprocessReport {
            scale_factor: scale,
            max_row_norm_before: max_norm,
            bias_appended: false,
        },
    )
}

/// Optionally appends a constant-1 bias feature, then scales globally into
/// the unit ball.
pub fn preprocess(table: &RawTable, append_bias: bool) -> Result<(Dataset, PreprocessReport)> {
    let raw = table.to_dataset(append_bias)?;
    let (data, mut report) = scale_to_unit_ball(&raw);
    report.bias_appended = append_bias;
    Ok((data, report))
}
