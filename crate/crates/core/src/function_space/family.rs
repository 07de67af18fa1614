use std::f64::consts::{PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};

use super::{Domain, GridFunction};

/// Offset added above the minimum when a random trigonometric polynomial is
/// shifted to positivity.
pub(crate) const RANDOM_TRIG_FLOOR: f64 = 0.01;

/// Closed-form function families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `f ≡ value`.
    Constant { value: f64 },
    /// `cos(kπt)` on an interval (`t` the unit-rescaled coordinate),
    /// `cos(2πkx/L)` on a circle.
    CosineMode { k: u32 },
    /// `√(1-ε²) + √2 ε cos πx` on `[0,1]`; unit mass for every ε.
    Sharpness { epsilon: f64 },
    /// `exp(-ε cos πx)` on `[0,1]`.
    Wang { epsilon: f64 },
    /// Random trigonometric polynomial with `1/k²`-decaying coefficients,
    /// shifted so its minimum over the grid is `0.01`.
    RandomTrig { seed: u64, modes: u32 },
}

impl Family {
    /// Resolves a family identifier and its positional parameters.
    pub fn parse(id: &str, params: &[f64]) -> Result<Self> {
        let key = id.trim().to_ascii_lowercase().replace('-', "_");
        let arity = match key.as_str() {
            "constant" | "cosine_mode" | "sharpness" | "wang" => 1,
            "random_trig" => 2,
            _ => return Err(LabError::UnknownFamily(id.to_string())),
        };
        if params.len() != arity {
            return Err(LabError::ParamOutOfRange(format!(
                "family {key} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let family = match key.as_str() {
            "constant" => Family::Constant { value: params[0] },
            "cosine_mode" => Family::CosineMode {
                k: nonneg_int(params[0], "k")? as u32,
            },
            "sharpness" => Family::Sharpness { epsilon: params[0] },
            "wang" => Family::Wang { epsilon: params[0] },
            _ => Family::RandomTrig {
                seed: nonneg_int(params[0], "seed")?,
                modes: nonneg_int(params[1], "modes")? as u32,
            },
        };
        family.validate()?;
        Ok(family)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Constant { value } if !value.is_finite() => Err(LabError::ParamOutOfRange(
                format!("constant value {value} is not finite"),
            )),
            Family::Sharpness { epsilon } | Family::Wang { epsilon }
                if !(epsilon > 0.0 && epsilon < 1.0) =>
            {
                Err(LabError::ParamOutOfRange(format!(
                    "epsilon must lie in (0, 1), got {epsilon}"
                )))
            }
            Family::RandomTrig { modes: 0, .. } => Err(LabError::ParamOutOfRange(
                "random_trig needs at least one mode".into(),
            )),
            _ => Ok(()),
        }
    }
}

fn nonneg_int(v: f64, name: &str) -> Result<u64> {
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v < 2f64.powi(53) {
        Ok(v as u64)
    } else {
        Err(LabError::ParamOutOfRange(format!(
            "{name} must be a non-negative integer, got {v}"
        )))
    }
}

/// Exact samples of `family` on the `n`-point grid of `domain`.
pub fn sample_family(family: &Family, domain: &Domain, n: usize) -> Result<GridFunction> {
    family.validate()?;
    let domain = *domain;
    match *family {
        Family::Constant { value } => GridFunction::constant(domain, n, value),
        Family::CosineMode { k } => {
            let freq = angular(&domain, k as f64);
            let origin = domain.origin();
            GridFunction::from_fn(domain, n, |x| (freq * (x - origin)).cos())
        }
        Family::Sharpness { epsilon } => {
            require_unit_interval(&domain, "sharpness")?;
            let base = (1.0 - epsilon * epsilon).sqrt();
            GridFunction::from_fn(domain, n, |x| base + SQRT_2 * epsilon * (PI * x).cos())
        }
        Family::Wang { epsilon } => {
            require_unit_interval(&domain, "wang")?;
            GridFunction::from_fn(domain, n, |x| (-epsilon * (PI * x).cos()).exp())
        }
        Family::RandomTrig { seed, modes } => random_trig(seed, modes, domain, n),
    }
}

/// Angular frequency of mode `k`: `kπ/(b-a)` on an interval, `2πk/L` on a
/// circle.
fn angular(domain: &Domain, k: f64) -> f64 {
    match *domain {
        Domain::Interval { a, b } => k * PI / (b - a),
        Domain::Circle { circumference } => 2.0 * PI * k / circumference,
    }
}

fn require_unit_interval(domain: &Domain, name: &str) -> Result<()> {
    if domain.is_unit_interval() {
        Ok(())
    } else {
        Err(LabError::DomainMismatch(format!(
            "family {name} lives on [0, 1], got {}",
            domain.describe()
        )))
    }
}

fn random_trig(seed: u64, modes: u32, domain: Domain, n: usize) -> Result<GridFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<(f64, f64, f64)> = (1..=modes)
        .map(|k| {
            let k = k as f64;
            let a = rng.gen_range(-1.0..1.0) / (k * k);
            let b = rng.gen_range(-1.0..1.0) / (k * k);
            (angular(&domain, k), a, b)
        })
        .collect();
    let origin = domain.origin();
    let raw = GridFunction::from_fn(domain, n, |x| {
        let t = x - origin;
        coeffs
            .iter()
            .map(|&(w, a, b)| a * (w * t).cos() + b * (w * t).sin())
            .sum()
    })?;
    let (_, min) = raw.min_value();
    raw.map(|v| v - min + RANDOM_TRIG_FLOOR)
}
