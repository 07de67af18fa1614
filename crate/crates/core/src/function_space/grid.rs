use crate::error::{LabError, Result};
use crate::tolerances::MIN_SAMPLES;

use super::Domain;

/// Uniformly sampled real function on a [`Domain`].
///
/// Interval samples sit at `a + i (b - a) / (N - 1)`; circle samples at
/// `i L / N`, so the wrap point is not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    domain: Domain,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(domain: Domain, values: Vec<f64>) -> Result<Self> {
        if values.len() < MIN_SAMPLES {
            return Err(LabError::TooFewSamples {
                min: MIN_SAMPLES,
                got: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(LabError::NonFinite(i));
        }
        Ok(Self { domain, values })
    }

    /// Samples `f` on the `n`-point grid of `domain`.
    pub fn from_fn(domain: Domain, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(domain.node(i, n))).collect();
        Self::new(domain, values)
    }

    pub fn constant(domain: Domain, n: usize, c: f64) -> Result<Self> {
        Self::new(domain, vec![c; n])
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        self.domain.spacing(self.len())
    }

    pub fn nodes(&self) -> Vec<f64> {
        self.domain.nodes(self.len())
    }

    /// Same grid, values mapped pointwise.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.domain, self.values.iter().map(|&v| f(v)).collect())
    }

    /// Same grid, values combined pointwise with another function on the
    /// same grid.
    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.domain != other.domain || self.len() != other.len() {
            return Err(LabError::DomainMismatch(format!(
                "cannot combine {} samples on {} with {} samples on {}",
                self.len(),
                self.domain.describe(),
                other.len(),
                other.domain.describe()
            )));
        }
        Self::new(
            self.domain,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        self.map(|v| v * factor)
    }

    /// Same samples reinterpreted on another domain of the same kind.
    pub fn with_domain(&self, domain: Domain) -> Result<Self> {
        if domain.is_circle() != self.domain.is_circle() {
            return Err(LabError::DomainMismatch(format!(
                "cannot move samples from {} to {}",
                self.domain.describe(),
                domain.describe()
            )));
        }
        Self::new(domain, self.values.clone())
    }

    pub fn min_value(&self) -> (usize, f64) {
        self.values
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |best, (i, v)| if v < best.1 { (i, v) } else { best },
            )
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enforces_minimum_size_and_finiteness() {
        let d = Domain::unit_interval();
        assert_eq!(
            GridFunction::new(d, vec![1.0; 15]),
            Err(LabError::TooFewSamples { min: 16, got: 15 })
        );
        let mut v = vec![1.0; 16];
        v[3] = f64::NAN;
        assert_eq!(GridFunction::new(d, v), Err(LabError::NonFinite(3)));
    }

    #[test]
    fn zip_requires_matching_grids() {
        let f = GridFunction::constant(Domain::unit_interval(), 17, 1.0).unwrap();
        let g = GridFunction::constant(Domain::unit_circle(), 17, 1.0).unwrap();
        assert!(f.zip_with(&g, |a, b| a + b).is_err());
        let h = f.zip_with(&f, |a, b| a + b).unwrap();
        assert!(h.values().iter().all(|&v| v == 2.0));
    }
}
