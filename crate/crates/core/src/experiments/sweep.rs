use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{sample_family, Domain, Family};
use crate::functionals::lsi_deficit_interval;

/// Smallest grid accepted by the sweep.
pub const MIN_SWEEP_N: usize = 2049;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub epsilon: f64,
    pub energy: f64,
    pub entropy: f64,
    pub ratio: f64,
    pub deficit: f64,
}

impl SweepRecord {
    pub const CSV_HEADER: &'static str = "epsilon,energy,entropy,ratio,deficit";

    pub fn csv_row(&self) -> String {
        format!(
            "{:?},{:?},{:?},{:?},{:?}",
            self.epsilon, self.energy, self.entropy, self.ratio, self.deficit
        )
    }
}

/// Energy, entropy, ratio and interval deficit of the sharpness family for
/// each ε, sorted by ε descending.
pub fn sharpness_sweep(eps_list: &[f64], n: usize) -> Result<Vec<SweepRecord>> {
    if n < MIN_SWEEP_N {
        return Err(LabError::ParamOutOfRange(format!(
            "sweep needs N >= {MIN_SWEEP_N}, got {n}"
        )));
    }
    if let Some(&bad) = eps_list.iter().find(|&&e| !(e > 0.0 && e < 1.0)) {
        return Err(LabError::ParamOutOfRange(format!(
            "epsilon must lie in (0, 1), got {bad}"
        )));
    }
    let domain = Domain::unit_interval();
    let mut records = eps_list
        .par_iter()
        .map(|&epsilon| {
            let f = sample_family(&Family::Sharpness { epsilon }, &domain, n)?;
            let report = lsi_deficit_interval(&f)?;
            Ok(SweepRecord {
                epsilon,
                energy: report.energy,
                entropy: report.entropy,
                ratio: report.energy / report.entropy,
                deficit: report.deficit,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| b.epsilon.total_cmp(&a.epsilon));
    Ok(records)
}

/// Richardson extrapolation of the ratio to ε = 0, treating it as a
/// polynomial in ε² through every distinct ε (Neville's scheme).
pub fn extrapolate_constant(records: &[SweepRecord]) -> Result<f64> {
    let mut points: Vec<(f64, f64)> = Vec::new();
    for r in records {
        if !points.iter().any(|&(e, _)| e == r.epsilon) {
            points.push((r.epsilon, r.ratio));
        }
    }
    if points.len() < 3 {
        return Err(LabError::InsufficientData(format!(
            "extrapolation needs 3 distinct epsilons, got {}",
            points.len()
        )));
    }
    points.sort_by(|a, b| b.0.total_cmp(&a.0));
    let t: Vec<f64> = points.iter().map(|&(e, _)| e * e).collect();
    let mut p: Vec<f64> = points.iter().map(|&(_, r)| r).collect();
    // p[i] after pass k interpolates nodes i..=i+k at t = 0.
    for k in 1..p.len() {
        for i in 0..p.len() - k {
            let j = i + k;
            p[i] = p[i + 1] + (p[i + 1] - p[i]) * t[j] / (t[i] - t[j]);
        }
    }
    Ok(p[0])
}
