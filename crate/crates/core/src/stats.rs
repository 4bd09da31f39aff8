//! Estimators and goodness-of-fit tests for sampler output.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::gamma_ur;
use thiserror::Error;

use crate::oracle::MeasureTable;
use crate::partitions::Partition;
use crate::rng::stream_rng;
use crate::rsk_sampler::{run_with, SamplerConfig, SamplerError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("sample has {got} boxes, expected {expected}")]
    SizeMismatch { got: u32, expected: u32 },
    #[error("no samples")]
    Empty,
    #[error("sample of {total} draws is too small for {cells} cells")]
    Undersized { total: u64, cells: usize },
    #[error("observed outcome {0} has zero expected weight")]
    OutsideSupport(String),
    #[error(transparent)]
    Sampler(#[from] SamplerError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexStat {
    pub i: usize,
    pub mean: f64,
    /// Standard error of the mean; absent with a single run.
    pub se: Option<f64>,
    pub target: f64,
    pub deviation: f64,
    /// deviation / se.
    pub normalized_deviation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyReport {
    pub n: u32,
    pub runs: usize,
    pub rows: Vec<IndexStat>,
    pub cols: Vec<IndexStat>,
    pub max_row_deviation: f64,
    pub max_col_deviation: f64,
    pub max_deviation: f64,
    pub se_defined: bool,
}

fn index_stats(values: &[Vec<f64>], targets: &[f64], width: usize) -> Vec<IndexStat> {
    let runs = values.len();
    (0..width)
        .map(|k| {
            let xs: Vec<f64> = values.iter().map(|v| v.get(k).copied().unwrap_or(0.0)).collect();
            let mean = xs.iter().sum::<f64>() / runs as f64;
            let se = (runs > 1).then(|| {
                let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (runs - 1) as f64;
                (var / runs as f64).sqrt()
            });
            let target = targets.get(k).copied().unwrap_or(0.0);
            let deviation = mean - target;
            IndexStat {
                i: k + 1,
                mean,
                se,
                target,
                deviation,
                normalized_deviation: se.filter(|s| *s > 0.0).map(|s| deviation / s),
            }
        })
        .collect()
}

/// Row and column frequency statistics λ_i/n and λ′_i/n against targets.
pub fn frequency_report(
    samples: &[Partition],
    n: u32,
    row_targets: &[f64],
    col_targets: &[f64],
) -> Result<FrequencyReport, StatsError> {
    if samples.is_empty() {
        return Err(StatsError::Empty);
    }
    if let Some(bad) = samples.iter().find(|s| s.size() != n) {
        return Err(StatsError::SizeMismatch { got: bad.size(), expected: n });
    }
    let scale = n.max(1) as f64;
    let rows: Vec<Vec<f64>> = samples.iter().map(|s| s.parts().iter().map(|&x| x as f64 / scale).collect()).collect();
    let cols: Vec<Vec<f64>> = samples.iter().map(|s| s.transpose().parts().iter().map(|&x| x as f64 / scale).collect()).collect();
    let rw = rows.iter().map(Vec::len).max().unwrap_or(0).max(row_targets.len());
    let cw = cols.iter().map(Vec::len).max().unwrap_or(0).max(col_targets.len());
    let rows = index_stats(&rows, row_targets, rw);
    let cols = index_stats(&cols, col_targets, cw);
    let max_abs = |v: &[IndexStat]| v.iter().map(|s| s.deviation.abs()).fold(0.0, f64::max);
    let (mr, mc) = (max_abs(&rows), max_abs(&cols));
    Ok(FrequencyReport {
        n,
        runs: samples.len(),
        rows,
        cols,
        max_row_deviation: mr,
        max_col_deviation: mc,
        max_deviation: mr.max(mc),
        se_defined: samples.len() > 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Upper tail of the chi-square law.
pub fn chi_square_sf(statistic: f64, dof: usize) -> f64 {
    if dof == 0 {
        return 1.0;
    }
    if statistic <= 0.0 {
        return 1.0;
    }
    gamma_ur(dof as f64 / 2.0, statistic / 2.0)
}

/// Pearson test of counts against cell probabilities; cells expecting fewer than
/// 5 draws are pooled into one extra cell.
pub fn chi_square_cells(observed: &[u64], probs: &[f64]) -> Result<ChiSquare, StatsError> {
    let total: u64 = observed.iter().sum();
    let cells = probs.iter().filter(|p| **p > 0.0).count();
    if total < 50 * cells as u64 {
        return Err(StatsError::Undersized { total, cells });
    }
    if let Some(k) = observed.iter().zip(probs).position(|(o, p)| *o > 0 && *p <= 0.0) {
        return Err(StatsError::OutsideSupport(format!("cell {k}")));
    }
    let n = total as f64;
    let mut kept = Vec::new();
    let (mut pooled_o, mut pooled_e) = (0.0, 0.0);
    for (o, p) in observed.iter().zip(probs) {
        let e = p * n;
        if e <= 0.0 {
            continue;
        }
        if e < 5.0 {
            pooled_o += *o as f64;
            pooled_e += e;
        } else {
            kept.push((*o as f64, e));
        }
    }
    if pooled_e > 0.0 {
        kept.push((pooled_o, pooled_e));
    }
    let statistic: f64 = kept.iter().map(|(o, e)| (o - e).powi(2) / e).sum();
    let dof = kept.len().saturating_sub(1);
    Ok(ChiSquare { statistic, dof, p_value: chi_square_sf(statistic, dof) })
}

/// Pearson test of partition counts against a table.
pub fn chi_square(counts: &BTreeMap<Partition, u64>, expected: &MeasureTable<f64>) -> Result<ChiSquare, StatsError> {
    if let Some((lam, _)) = counts.iter().find(|(k, c)| **c > 0 && expected.weight(k) <= 0.0) {
        return Err(StatsError::OutsideSupport(lam.to_string()));
    }
    let (obs, probs): (Vec<u64>, Vec<f64>) =
        expected.weights.iter().map(|(k, w)| (counts.get(k).copied().unwrap_or(0), *w)).unzip();
    chi_square_cells(&obs, &probs)
}

#[derive(Debug, Clone)]
pub struct LlnOutput {
    pub report: FrequencyReport,
    /// Rows `run_id,n,i,lambda_i_over_n,lambda_prime_i_over_n`.
    pub csv: String,
}

/// Row targets α and column targets β/(1−t) of a config.
pub fn lln_targets(config: &SamplerConfig) -> (Vec<f64>, Vec<f64>) {
    let fs = config.float_spec();
    let (a, b, _) = fs.letter_masses();
    (a, b)
}

/// Runs `runs` independent samples of λ^max(n) in parallel, one stream per run.
pub fn lln_experiment(config: &SamplerConfig, n: u32, runs: u32, seed: u64) -> Result<LlnOutput, StatsError> {
    let samples: Vec<Partition> = (0..runs)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(seed, r as u64);
            run_with(config, n, &mut rng, |_, _, _| {}).map(|s| s.top_shape())
        })
        .collect::<Result<_, _>>()?;
    let (rt, ct) = lln_targets(config);
    let report = frequency_report(&samples, n, &rt, &ct)?;
    let width = rt.len().max(ct.len()) + 1;
    let mut csv = String::from("run_id,n,i,lambda_i_over_n,lambda_prime_i_over_n\n");
    let scale = n.max(1) as f64;
    for (r, s) in samples.iter().enumerate() {
        let tr = s.transpose();
        for i in 1..=width {
            csv.push_str(&format!("{r},{n},{i},{},{}\n", s.part(i) as f64 / scale, tr.part(i) as f64 / scale));
        }
    }
    Ok(LlnOutput { report, csv })
}
