use std::f64::consts::PI;

use crate::error::{LabError, Result};
use crate::function_space::{Domain, GridFunction};

use super::{dirichlet_energy, l2_mass, mean};

/// `∫f'² - (π/(b-a))² ∫(f - f̄)²`; zero on constants and on `cos(π(x-a)/(b-a))`.
pub fn wirtinger_deficit(f: &GridFunction) -> Result<f64> {
    let len = match *f.domain() {
        Domain::Interval { a, b } => b - a,
        Domain::Circle { .. } => {
            return Err(LabError::DomainMismatch(
                "the Wirtinger deficit is defined on intervals".into(),
            ))
        }
    };
    let centred = f.map(|v| v - mean(f))?;
    Ok(dirichlet_energy(f) - PI * PI / (len * len) * l2_mass(&centred))
}
