use crate::error::{LabError, Result};
use crate::function_space::{Domain, FourierSeries, GridFunction};

use super::entropy;

/// Mode weight in the Fourier-side entropy bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundPower {
    /// `|n|`, the stronger bound.
    AbsN,
    /// `n²`, equivalent to the sharp circle inequality.
    NSquared,
}

/// `Σ w(n) |a_n|² + M log √M` with `M = Σ |a_n|²`.
///
/// Integrals are taken against the unit-mass measure of the circle, so
/// `M = ‖f‖²` and the bound is compared with [`normalized_entropy`].
pub fn weissler_bound(s: &FourierSeries, power: BoundPower) -> Result<f64> {
    s.check_hermitian()?;
    let weighted: f64 = s
        .modes()
        .map(|(n, a)| {
            let w = match power {
                BoundPower::AbsN => n.unsigned_abs() as f64,
                BoundPower::NSquared => (n * n) as f64,
            };
            w * a.norm_sqr()
        })
        .sum();
    let mass = s.mass();
    let tail = if mass > 0.0 {
        0.5 * mass * mass.ln()
    } else {
        0.0
    };
    Ok(weighted + tail)
}

/// `(1/L) ∮ f² log f`: entropy against the unit-mass circle measure.
pub fn normalized_entropy(f: &GridFunction) -> Result<f64> {
    match *f.domain() {
        Domain::Circle { circumference } => Ok(entropy(f)? / circumference),
        Domain::Interval { .. } => Err(LabError::DomainMismatch(
            "normalized entropy is defined on circles".into(),
        )),
    }
}
