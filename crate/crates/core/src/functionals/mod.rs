//! Scalar functionals and inequality deficits.
//!
//! A deficit is right-hand side minus left-hand side, so it is non-negative
//! exactly when the inequality holds for the input.

mod diaz;
mod fourier_bound;
mod lsi;
mod report;
mod wirtinger;

pub use diaz::{diaz_deficit, DiazConfig};
pub use fourier_bound::{normalized_entropy, weissler_bound, BoundPower};
pub use lsi::{
    lsi_deficit_circle, lsi_deficit_density_form, lsi_deficit_density_form_scaled,
    lsi_deficit_general, lsi_deficit_interval, root_mean_square,
};
pub use report::FunctionalReport;
pub use wirtinger::wirtinger_deficit;

pub(crate) use lsi::{density_report, l2_report};

use crate::error::{LabError, Result};
use crate::function_space::{differentiate, integrate, integrate_values, GridFunction};
use crate::tolerances::CLAMP_NEGATIVE;

/// `t² log t` with `0² log 0 = 0`.
pub(crate) fn sq_log(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * t * t.ln()
    }
}

/// Samples with tiny negative round-off clamped to zero.
pub(crate) fn clamped_values(f: &GridFunction) -> Result<Vec<f64>> {
    f.values()
        .iter()
        .enumerate()
        .map(|(index, &value)| {
            if value < -CLAMP_NEGATIVE {
                Err(LabError::NegativeFunction { index, value })
            } else {
                Ok(value.max(0.0))
            }
        })
        .collect()
}

/// `∫ f² log f`.
pub fn entropy(f: &GridFunction) -> Result<f64> {
    let v: Vec<f64> = clamped_values(f)?.into_iter().map(sq_log).collect();
    Ok(integrate_values(f.domain(), &v))
}

/// `∫ f'²`.
pub fn dirichlet_energy(f: &GridFunction) -> f64 {
    let df = differentiate(f);
    let sq: Vec<f64> = df.values().iter().map(|v| v * v).collect();
    integrate_values(f.domain(), &sq).max(0.0)
}

/// `∫ f²`.
pub fn l2_mass(f: &GridFunction) -> f64 {
    let sq: Vec<f64> = f.values().iter().map(|v| v * v).collect();
    integrate_values(f.domain(), &sq)
}

/// Mean value `(1/|D|) ∫ f`.
pub fn mean(f: &GridFunction) -> f64 {
    integrate(f) / f.domain().length()
}
