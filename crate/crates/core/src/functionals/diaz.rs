use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{differentiate, integrate_values, GridFunction};

use super::clamped_values;

/// Exponent and sampling resolution for the isoperimetric conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiazConfig {
    pub q: f64,
    pub n: usize,
}

impl DiazConfig {
    pub fn new(q: f64, n: usize) -> Result<Self> {
        let cfg = Self { q, n };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.q > 1.0 && self.q <= 2.0) {
            return Err(LabError::ParamOutOfRange(format!(
                "q must lie in (1, 2], got {}",
                self.q
            )));
        }
        Ok(())
    }
}

/// `∫√(r² + (q-1) r'²/π²) - (∫ r^q)^{1/q}` on `[0, 1]`.
///
/// The underlying inequality is open; a negative value is a candidate
/// counterexample, not an error.
pub fn diaz_deficit(r: &GridFunction, cfg: &DiazConfig) -> Result<f64> {
    cfg.validate()?;
    if !r.domain().is_unit_interval() {
        return Err(LabError::DomainMismatch(format!(
            "the conjecture lives on [0, 1], got {}",
            r.domain().describe()
        )));
    }
    let v = clamped_values(r)?;
    let dr = differentiate(r);
    let q = cfg.q;
    let k = (q - 1.0) / (PI * PI);
    let arc: Vec<f64> = v
        .iter()
        .zip(dr.values())
        .map(|(x, d)| (x * x + k * d * d).sqrt())
        .collect();
    let pow: Vec<f64> = v.iter().map(|x| x.powf(q)).collect();
    let lhs = integrate_values(r.domain(), &pow).powf(1.0 / q);
    Ok(integrate_values(r.domain(), &arc) - lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function_space::Domain;

    #[test]
    fn exponent_range() {
        assert!(DiazConfig::new(1.0, 64).is_err());
        assert!(DiazConfig::new(2.5, 64).is_err());
        assert!(DiazConfig::new(2.0, 64).is_ok());
    }

    #[test]
    fn constants_are_equality_cases() {
        let c = GridFunction::constant(Domain::unit_interval(), 65, 3.0).unwrap();
        for q in [1.25, 1.5, 2.0] {
            let cfg = DiazConfig::new(q, 65).unwrap();
            assert!(diaz_deficit(&c, &cfg).unwrap().abs() < 1e-13);
        }
    }
}
