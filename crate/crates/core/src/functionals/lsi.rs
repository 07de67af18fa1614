use std::f64::consts::PI;

use crate::error::{LabError, Result};
use crate::function_space::{differentiate, integrate_values, Domain, GridFunction};
use crate::tolerances::{NORMALIZATION, POSITIVITY_FLOOR, ZERO_MASS};

use super::{dirichlet_energy, entropy, l2_mass, FunctionalReport};

/// L² report against an arbitrary constant and entropy correction, with no
/// normalization requirement.
pub(crate) fn l2_report(
    f: &GridFunction,
    constant: f64,
    correction: f64,
    m: Option<f64>,
) -> Result<FunctionalReport> {
    let h = entropy(f)?;
    Ok(FunctionalReport::assemble(
        l2_mass(f),
        h,
        dirichlet_energy(f),
        constant,
        correction,
        m,
    ))
}

fn require_unit_mass(f: &GridFunction) -> Result<()> {
    let mass = l2_mass(f);
    if (mass - 1.0).abs() > NORMALIZATION {
        return Err(LabError::NotNormalized(mass));
    }
    Ok(())
}

/// `∫f'² - π² ∫f² log f` for unit-mass `f ≥ 0` on `[0,1]`.
pub fn lsi_deficit_interval(f: &GridFunction) -> Result<FunctionalReport> {
    if !f.domain().is_unit_interval() {
        return Err(LabError::DomainMismatch(format!(
            "interval deficit needs [0, 1], got {}",
            f.domain().describe()
        )));
    }
    require_unit_mass(f)?;
    l2_report(f, PI * PI, 0.0, None)
}

/// `∮f'² - 4π² ∮f² log f` for unit-mass `f ≥ 0` on the circle of length 1.
pub fn lsi_deficit_circle(f: &GridFunction) -> Result<FunctionalReport> {
    if !f.domain().is_unit_circle() {
        return Err(LabError::DomainMismatch(format!(
            "circle deficit needs the circle of length 1, got {}",
            f.domain().describe()
        )));
    }
    require_unit_mass(f)?;
    l2_report(f, 4.0 * PI * PI, 0.0, None)
}

/// `√((1/|D|) ∫f²)`.
pub fn root_mean_square(f: &GridFunction) -> f64 {
    (l2_mass(f) / f.domain().length()).sqrt()
}

/// Arbitrary-interval form:
/// `∫f'² - (π²/(b-a)²) (∫f² log f - (b-a) m² log m)`, `m` the root mean
/// square.
pub fn lsi_deficit_general(f: &GridFunction) -> Result<FunctionalReport> {
    let len = interval_length(f.domain())?;
    let m = root_mean_square(f);
    if m <= ZERO_MASS {
        return Err(LabError::ZeroMass(m));
    }
    l2_report(f, PI * PI / (len * len), len * m * m * m.ln(), Some(m))
}

/// Density (Fisher-information) form for strictly positive `f`:
/// `∫f'²/f - (2π²/(b-a)²) (∫f log f - m log m)`, `m` the mean of `f`.
///
/// The report's `mass` is `∫f`, `entropy` is `∫f log f` and `energy` is
/// `∫f'²/f`. The correction is `m log m` with no `(b-a)` factor. On
/// intervals of unit length this is four times the arbitrary-interval
/// deficit of `√f`; elsewhere the two differ by
/// `(2π²/(b-a)²) m log m (b - a - 1)` and the form can go negative, e.g. on
/// constants other than 1. [`lsi_deficit_density_form_scaled`] is the
/// variant that follows from the square-root lift on every interval.
pub fn lsi_deficit_density_form(f: &GridFunction) -> Result<FunctionalReport> {
    density_form(f, false)
}

/// Density form with the correction `(b-a) m log m`, which is exactly
/// `4 ×` [`lsi_deficit_general`] of `√f`.
pub fn lsi_deficit_density_form_scaled(f: &GridFunction) -> Result<FunctionalReport> {
    density_form(f, true)
}

fn density_form(f: &GridFunction, scaled: bool) -> Result<FunctionalReport> {
    let len = interval_length(f.domain())?;
    let (index, value) = f.min_value();
    if value < POSITIVITY_FLOOR {
        return Err(LabError::NonPositiveFunction { index, value });
    }
    let report = density_report(f, 2.0 * PI * PI / (len * len))?;
    if !scaled {
        return Ok(report);
    }
    Ok(FunctionalReport::assemble(
        report.mass,
        report.entropy,
        report.energy,
        report.constant,
        len * report.correction,
        report.m,
    ))
}

/// Density-form report against an arbitrary constant; `f` must already be
/// known to be strictly positive.
pub(crate) fn density_report(f: &GridFunction, constant: f64) -> Result<FunctionalReport> {
    let v = f.values();
    let df = differentiate(f);
    let fisher: Vec<f64> = df.values().iter().zip(v).map(|(d, x)| d * d / x).collect();
    let ent: Vec<f64> = v.iter().map(|x| x * x.ln()).collect();
    let mass = integrate_values(f.domain(), v);
    let m = mass / f.domain().length();
    Ok(FunctionalReport::assemble(
        mass,
        integrate_values(f.domain(), &ent),
        integrate_values(f.domain(), &fisher).max(0.0),
        constant,
        m * m.ln(),
        Some(m),
    ))
}

fn interval_length(domain: &Domain) -> Result<f64> {
    match *domain {
        Domain::Interval { a, b } => Ok(b - a),
        Domain::Circle { .. } => Err(LabError::DomainMismatch(
            "this deficit is defined on intervals".into(),
        )),
    }
}
