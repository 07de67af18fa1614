use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{sample_family, Domain, Family, GridFunction};
use crate::functionals::{diaz_deficit, DiazConfig};
use crate::tolerances::DIAZ_FLAG;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeSettings {
    /// Grid size on `[0, 1]`.
    pub n: usize,
    /// Trial `t` uses `1 + (t - 1) % max_modes` random modes.
    pub max_modes: u32,
    pub flag_below: f64,
}

impl Default for ProbeSettings {
    fn default() -> Self {
        Self {
            n: 2049,
            max_modes: 8,
            flag_below: DIAZ_FLAG,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiazQSummary {
    pub q: f64,
    pub min_deficit: f64,
    /// Trial attaining `min_deficit`.
    pub argmin_trial: usize,
    /// True when `min_deficit` fell below the flag threshold.
    pub flag: bool,
    /// The offending function when flagged.
    #[serde(skip)]
    pub witness: Option<GridFunction>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiazProbeReport {
    pub trials: usize,
    pub seed: u64,
    pub settings: ProbeSettings,
    pub per_q: Vec<DiazQSummary>,
}

impl DiazProbeReport {
    pub const CSV_HEADER: &'static str = "q,min_deficit,flag";

    pub fn any_flagged(&self) -> bool {
        self.per_q.iter().any(|s| s.flag)
    }
}

/// Seed of random trial `t` under probe seed `seed`.
fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Trial 0 is the constant 1; the rest are random positive trigonometric
/// polynomials.
fn trial_function(seed: u64, trial: usize, settings: &ProbeSettings) -> Result<GridFunction> {
    let domain = Domain::unit_interval();
    let family = if trial == 0 {
        Family::Constant { value: 1.0 }
    } else {
        Family::RandomTrig {
            seed: trial_seed(seed, trial),
            modes: 1 + ((trial - 1) as u32 % settings.max_modes),
        }
    };
    sample_family(&family, &domain, settings.n)
}

pub fn diaz_probe(q_list: &[f64], trials: usize, seed: u64) -> Result<DiazProbeReport> {
    diaz_probe_with(q_list, trials, seed, &ProbeSettings::default())
}

/// Minimum conjecture deficit per exponent over `trials` functions.
pub fn diaz_probe_with(
    q_list: &[f64],
    trials: usize,
    seed: u64,
    settings: &ProbeSettings,
) -> Result<DiazProbeReport> {
    if trials == 0 {
        return Err(LabError::ParamOutOfRange(
            "probe needs at least one trial".into(),
        ));
    }
    if settings.max_modes == 0 {
        return Err(LabError::ParamOutOfRange(
            "probe needs at least one mode".into(),
        ));
    }
    let configs = q_list
        .iter()
        .map(|&q| DiazConfig::new(q, settings.n))
        .collect::<Result<Vec<_>>>()?;

    let table = (0..trials)
        .into_par_iter()
        .map(|t| {
            let r = trial_function(seed, t, settings)?;
            configs
                .iter()
                .map(|cfg| diaz_deficit(&r, cfg))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let per_q =
        configs
            .iter()
            .enumerate()
            .map(|(j, cfg)| {
                let (argmin_trial, min_deficit) = table.iter().map(|row| row[j]).enumerate().fold(
                    (0, f64::INFINITY),
                    |b, (t, d)| if d < b.1 { (t, d) } else { b },
                );
                let flag = min_deficit < -settings.flag_below;
                let witness = if flag {
                    Some(trial_function(seed, argmin_trial, settings)?)
                } else {
                    None
                };
                Ok(DiazQSummary {
                    q: cfg.q,
                    min_deficit,
                    argmin_trial,
                    flag,
                    witness,
                })
            })
            .collect::<Result<Vec<_>>>()?;

    Ok(DiazProbeReport {
        trials,
        seed,
        settings: *settings,
        per_q,
    })
}
