//! Aggregate tables over held-out rows: the ε sweep and the mode comparison.

use serde::{Deserialize, Serialize};

use super::report::ResultRow;
use crate::error::{Error, Result};

pub const CENTRALIZED: &str = "CENTRALIZED";
pub const PRIVATE_MODE: &str = "FEDERATED_DP";

/// Mean and sample standard deviation; the deviation is 0 for one value.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub loss_kind: String,
    pub epsilon: f64,
    pub runs: usize,
    pub mean_f1: f64,
    pub std_f1: f64,
}

pub const SWEEP_COLUMNS: [&str; 5] = ["loss_kind", "epsilon", "runs", "mean_f1", "std_f1"];

/// Groups first-seen keys in input order.
fn group_by<K: PartialEq + Clone>(rows: &[&ResultRow], key: impl Fn(&ResultRow) -> K) -> Vec<(K, Vec<f64>)> {
    let mut groups: Vec<(K, Vec<f64>)> = Vec::new();
    for r in rows {
        let k = key(r);
        match groups.iter_mut().find(|(g, _)| *g == k) {
            Some((_, v)) => v.push(r.f1),
            None => groups.push((k, vec![r.f1])),
        }
    }
    groups
}

/// Held-out F1 of the private mode per (loss, ε), ascending in ε.
pub fn epsilon_sweep(rows: &[ResultRow]) -> Result<Vec<SweepRow>> {
    let private: Vec<&ResultRow> = rows
        .iter()
        .filter(|r| r.is_holdout() && r.mode == PRIVATE_MODE && r.epsilon.is_some())
        .collect();
    if private.is_empty() {
        return Err(Error::EmptyInput("held-out FEDERATED_DP rows"));
    }
    let losses = first_seen(private.iter().map(|r| r.loss_kind.clone()));
    let mut out: Vec<SweepRow> = group_by(&private, |r| (r.loss_kind.clone(), r.epsilon.unwrap().to_bits()))
        .into_iter()
        .map(|((loss_kind, eps), f1s)| {
            let (mean_f1, std_f1) = mean_std(&f1s);
            SweepRow {
                loss_kind,
                epsilon: f64::from_bits(eps),
                runs: f1s.len(),
                mean_f1,
                std_f1,
            }
        })
        .collect();
    let loss_rank = |l: &str| losses.iter().position(|x| x == l);
    out.sort_by(|a, b| {
        a.epsilon
            .total_cmp(&b.epsilon)
            .then(loss_rank(&a.loss_kind).cmp(&loss_rank(&b.loss_kind)))
    });
    Ok(out)
}

fn first_seen(items: impl Iterator<Item = String>) -> Vec<String> {
    let mut seen: Vec<String> = Vec::new();
    for i in items {
        if !seen.contains(&i) {
            seen.push(i);
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub loss_kind: String,
    pub mode: String,
    pub epsilon: Option<f64>,
    pub runs: usize,
    pub mean_f1: f64,
    pub std_f1: f64,
    /// mean F1 of this mode minus mean F1 of CENTRALIZED for the same loss.
    pub gap_vs_centralized: Option<f64>,
    pub note: String,
}

pub const COMPARE_COLUMNS: [&str; 8] = [
    "loss_kind",
    "mode",
    "epsilon",
    "runs",
    "mean_f1",
    "std_f1",
    "gap_vs_centralized",
    "note",
];

/// Held-out F1 per (loss, mode, ε) with the gap to the centralized baseline.
///
/// A loss without a centralized baseline gets empty gap cells and a
/// `WARNING` row.
pub fn compare_modes(rows: &[ResultRow]) -> Result<Vec<CompareRow>> {
    let holdout: Vec<&ResultRow> = rows.iter().filter(|r| r.is_holdout()).collect();
    let modes = first_seen(holdout.iter().map(|r| r.mode.clone()));
    if modes.len() < 2 {
        return Err(Error::invalid(
            "modes",
            format!("comparison needs at least two modes, found {}", modes.len()),
        ));
    }
    let mut out = Vec::new();
    for loss in first_seen(holdout.iter().map(|r| r.loss_kind.clone())) {
        let of_loss: Vec<&ResultRow> = holdout.iter().copied().filter(|r| r.loss_kind == loss).collect();
        let mut groups = group_by(&of_loss, |r| (r.mode.clone(), r.epsilon.map(f64::to_bits)));
        groups.sort_by(|((ma, ea), _), ((mb, eb), _)| {
            ma.cmp(mb)
                .then(ea.map(f64::from_bits).unwrap_or(f64::NEG_INFINITY).total_cmp(&eb.map(f64::from_bits).unwrap_or(f64::NEG_INFINITY)))
        });
        let baseline = groups
            .iter()
            .find(|((m, _), _)| m == CENTRALIZED)
            .map(|(_, f1s)| mean_std(f1s).0);
        if baseline.is_none() {
            out.push(CompareRow {
                loss_kind: loss.clone(),
                mode: "WARNING".into(),
                epsilon: None,
                runs: 0,
                mean_f1: f64::NAN,
                std_f1: f64::NAN,
                gap_vs_centralized: None,
                note: "no CENTRALIZED baseline; gap columns left empty".into(),
            });
        }
        for ((mode, eps), f1s) in groups {
            let (mean_f1, std_f1) = mean_std(&f1s);
            out.push(CompareRow {
                loss_kind: loss.clone(),
                mode,
                epsilon: eps.map(f64::from_bits),
                runs: f1s.len(),
                mean_f1,
                std_f1,
                gap_vs_centralized: baseline.map(|b| mean_f1 - b),
                note: String::new(),
            });
        }
    }
    Ok(out)
}
