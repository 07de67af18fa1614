//! Constructive maps between inequalities: reflection doubling of `[0,1]`
//! onto the unit circle, affine normalization of `[a,b]` onto `[0,1]`, and
//! the square-root lift from the density form to the L² form.
//!
//! Each map returns a [`TransformCertificate`] whose residuals are absolute
//! differences between quantities that must agree in the continuum.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{Domain, GridFunction};
use crate::functionals::{
    clamped_values, density_report, l2_mass, l2_report, lsi_deficit_density_form,
    lsi_deficit_general, root_mean_square, sq_log, FunctionalReport,
};
use crate::tolerances::{POSITIVITY_FLOOR, ZERO_MASS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformCertificate {
    pub input_report: FunctionalReport,
    pub output_report: FunctionalReport,
    pub residuals: BTreeMap<String, f64>,
}

impl TransformCertificate {
    pub fn residual(&self, name: &str) -> Option<f64> {
        self.residuals.get(name).copied()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.values().fold(0.0, |m, &r| m.max(r))
    }
}

fn residuals<const K: usize>(entries: [(&str, f64); K]) -> BTreeMap<String, f64> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.abs()))
        .collect()
}

/// Even extension of `f` on `[0,1]` to the circle of length 1:
/// `g(x) = f(2x)` on `[0, ½]`, `g(x) = f(2 - 2x)` on `(½, 1)`.
///
/// `N` input samples become `2(N-1)` circle samples, so the fold point
/// `x = ½` is a grid node. Residuals: `mass` (`∮g² = ∫f²`), `entropy`
/// (`∮g² log g = ∫f² log f`), `energy` (`∮g'² = 4∫f'²`) and `deficit`
/// (circle deficit = 4 × interval deficit). Mass and entropy are compared
/// against the trapezoid sums on `[0,1]`, which the periodic sums over the
/// fold reproduce exactly; the reports keep the usual interval rule. The
/// energy residual also measures the spectral penalty of a fold where
/// `f'(0)` or `f'(1)` is nonzero.
pub fn reflect_to_circle(f: &GridFunction) -> Result<(GridFunction, TransformCertificate)> {
    if !f.domain().is_unit_interval() {
        return Err(LabError::DomainMismatch(format!(
            "reflection starts from [0, 1], got {}",
            f.domain().describe()
        )));
    }
    let n = f.len();
    if n.is_multiple_of(2) {
        return Err(LabError::EvenSampleCount(n));
    }
    let v = f.values();
    let folded: Vec<f64> = v.iter().chain(v[1..n - 1].iter().rev()).copied().collect();
    let g = GridFunction::new(Domain::unit_circle(), folded)?;

    let input_report = l2_report(f, PI * PI, 0.0, None)?;
    let output_report = l2_report(&g, 4.0 * PI * PI, 0.0, None)?;
    let certificate = TransformCertificate {
        residuals: residuals([
            ("mass", output_report.mass - trapezoid(f, |v| v * v)?),
            ("entropy", output_report.entropy - trapezoid(f, sq_log)?),
            ("energy", output_report.energy - 4.0 * input_report.energy),
            (
                "deficit",
                output_report.deficit - 4.0 * input_report.deficit,
            ),
        ]),
        input_report,
        output_report,
    };
    Ok((g, certificate))
}

fn trapezoid(f: &GridFunction, integrand: impl Fn(f64) -> f64) -> Result<f64> {
    let v = clamped_values(f)?;
    let n = v.len();
    let inner: f64 = v[1..n - 1].iter().map(|&x| integrand(x)).sum();
    Ok(f.spacing() * (inner + 0.5 * (integrand(v[0]) + integrand(v[n - 1]))))
}

/// `g(x) = f((b-a)x + a) / m` on `[0,1]`, `m` the root mean square of `f`.
///
/// Residuals: `mass` (`∫g² = 1`), `energy` (`m² ∫g'² = (b-a) ∫f'²`),
/// `entropy` (`(b-a) m² ∫g² log g = ∫f² log f - (b-a) m² log m`) and
/// `deficit` (general deficit of `f` = `(m²/(b-a))` × unit deficit of `g`).
pub fn affine_normalize(f: &GridFunction) -> Result<(GridFunction, f64, TransformCertificate)> {
    let len = match *f.domain() {
        Domain::Interval { a, b } => b - a,
        Domain::Circle { .. } => {
            return Err(LabError::DomainMismatch(
                "affine normalization starts from an interval".into(),
            ))
        }
    };
    let m = root_mean_square(f);
    if m <= ZERO_MASS {
        return Err(LabError::ZeroMass(m));
    }
    let g = f.map(|v| v / m)?.with_domain(Domain::unit_interval())?;

    let input_report = lsi_deficit_general(f)?;
    let output_report = l2_report(&g, PI * PI, 0.0, None)?;
    let mm = m * m;
    let certificate = TransformCertificate {
        residuals: residuals([
            ("mass", l2_mass(&g) - 1.0),
            (
                "energy",
                mm * output_report.energy - len * input_report.energy,
            ),
            (
                "entropy",
                len * mm * output_report.entropy - (input_report.entropy - input_report.correction),
            ),
            (
                "deficit",
                input_report.deficit - mm / len * output_report.deficit,
            ),
        ]),
        input_report,
        output_report,
    };
    Ok((g, m, certificate))
}

/// `g = √f` for strictly positive `f`.
///
/// Residuals: `energy` (`4 ∫g'² = ∫f'²/f`), `entropy`
/// (`∫g² log g = ½ ∫f log f`) and, on intervals, `deficit` (density-form
/// deficit of `f` = 4 × general deficit of `g`). The last identity holds
/// for the density form as displayed only when `b - a = 1` or the mean of
/// `f` is 1; elsewhere the residual equals
/// `(2π²/(b-a)²) |m log m| |b - a - 1|`.
pub fn sqrt_lift(f: &GridFunction) -> Result<(GridFunction, TransformCertificate)> {
    let (index, value) = f.min_value();
    if value < POSITIVITY_FLOOR {
        return Err(LabError::NonPositiveFunction { index, value });
    }
    let g = f.map(f64::sqrt)?;
    let domain = *f.domain();
    let len = domain.length();

    let (input_report, output_report) = match domain {
        Domain::Interval { .. } => (lsi_deficit_density_form(f)?, lsi_deficit_general(&g)?),
        Domain::Circle { .. } => {
            // Same forms with the circle constant 4π²/L².
            let kappa = 4.0 * PI * PI / (len * len);
            let density = density_report(f, 2.0 * kappa)?;
            let m = root_mean_square(&g);
            (
                density,
                l2_report(&g, kappa, len * m * m * m.ln(), Some(m))?,
            )
        }
    };
    let mut res = residuals([
        ("energy", 4.0 * output_report.energy - input_report.energy),
        (
            "entropy",
            output_report.entropy - 0.5 * input_report.entropy,
        ),
    ]);
    if !domain.is_circle() {
        res.insert(
            "deficit".into(),
            (input_report.deficit - 4.0 * output_report.deficit).abs(),
        );
    }
    Ok((
        g,
        TransformCertificate {
            input_report,
            output_report,
            residuals: res,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_needs_odd_unit_interval_grid() {
        let f = GridFunction::constant(Domain::unit_interval(), 64, 1.0).unwrap();
        assert_eq!(
            reflect_to_circle(&f).unwrap_err(),
            LabError::EvenSampleCount(64)
        );
        let f = GridFunction::constant(Domain::interval(0.0, 2.0).unwrap(), 65, 1.0).unwrap();
        assert!(matches!(
            reflect_to_circle(&f),
            Err(LabError::DomainMismatch(_))
        ));
    }

    #[test]
    fn reflection_layout() {
        let f = GridFunction::from_fn(Domain::unit_interval(), 17, |x| x).unwrap();
        let (g, _) = reflect_to_circle(&f).unwrap();
        assert_eq!(g.len(), 32);
        assert_eq!(g.values()[16], 1.0);
        assert_eq!(g.values()[17], f.values()[15]);
        assert_eq!(g.values()[31], f.values()[1]);
    }

    #[test]
    fn constant_maps() {
        let f = GridFunction::constant(Domain::unit_interval(), 65, 1.0).unwrap();
        let (g, cert) = reflect_to_circle(&f).unwrap();
        assert!(g.values().iter().all(|&v| v == 1.0));
        assert!(cert.max_residual() < 1e-15);

        let f = GridFunction::constant(Domain::interval(-2.0, 1.0).unwrap(), 65, 3.0).unwrap();
        let (g, m, cert) = affine_normalize(&f).unwrap();
        assert!((m - 3.0).abs() < 1e-15);
        assert!(g.values().iter().all(|&v| (v - 1.0).abs() < 1e-15));
        assert!(cert.max_residual() < 1e-12);

        let f = GridFunction::constant(Domain::unit_interval(), 65, 4.0).unwrap();
        let (g, cert) = sqrt_lift(&f).unwrap();
        assert!(g.values().iter().all(|&v| v == 2.0));
        assert!(cert.residual("entropy").unwrap() < 1e-12);
    }

    #[test]
    fn lift_rejects_zero() {
        let f = GridFunction::constant(Domain::unit_interval(), 33, 0.0).unwrap();
        assert!(matches!(
            sqrt_lift(&f),
            Err(LabError::NonPositiveFunction { .. })
        ));
        assert!(matches!(affine_normalize(&f), Err(LabError::ZeroMass(_))));
    }
}
