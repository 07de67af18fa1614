use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::tolerances::UNIT_LENGTH;

/// A compact interval `[a, b]` or a circle of given circumference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Domain {
    Interval { a: f64, b: f64 },
    Circle { circumference: f64 },
}

impl Domain {
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(LabError::InvalidDomain(format!(
                "interval endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(LabError::InvalidDomain(format!(
                "interval needs a < b, got [{a}, {b}]"
            )));
        }
        Ok(Domain::Interval { a, b })
    }

    pub fn circle(circumference: f64) -> Result<Self> {
        if !(circumference.is_finite() && circumference > 0.0) {
            return Err(LabError::InvalidDomain(format!(
                "circumference must be positive and finite, got {circumference}"
            )));
        }
        Ok(Domain::Circle { circumference })
    }

    pub fn unit_interval() -> Self {
        Domain::Interval { a: 0.0, b: 1.0 }
    }

    pub fn unit_circle() -> Self {
        Domain::Circle { circumference: 1.0 }
    }

    /// Total length: `b - a` or the circumference.
    pub fn length(&self) -> f64 {
        match *self {
            Domain::Interval { a, b } => b - a,
            Domain::Circle { circumference } => circumference,
        }
    }

    /// Left end of the sampling grid.
    pub fn origin(&self) -> f64 {
        match *self {
            Domain::Interval { a, .. } => a,
            Domain::Circle { .. } => 0.0,
        }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self, Domain::Circle { .. })
    }

    /// Grid spacing for `n` samples.
    pub fn spacing(&self, n: usize) -> f64 {
        match *self {
            Domain::Interval { a, b } => (b - a) / (n - 1) as f64,
            Domain::Circle { circumference } => circumference / n as f64,
        }
    }

    /// The `i`-th of `n` grid nodes.
    pub fn node(&self, i: usize, n: usize) -> f64 {
        match *self {
            Domain::Interval { a, b } => {
                if i + 1 == n {
                    b
                } else {
                    a + i as f64 * (b - a) / (n - 1) as f64
                }
            }
            Domain::Circle { circumference } => i as f64 * circumference / n as f64,
        }
    }

    pub fn nodes(&self, n: usize) -> Vec<f64> {
        (0..n).map(|i| self.node(i, n)).collect()
    }

    pub fn is_unit_interval(&self) -> bool {
        matches!(*self, Domain::Interval { a, b } if a == 0.0 && b == 1.0)
    }

    pub fn is_unit_circle(&self) -> bool {
        matches!(*self, Domain::Circle { circumference } if (circumference - 1.0).abs() <= UNIT_LENGTH)
    }

    pub(crate) fn describe(&self) -> String {
        match *self {
            Domain::Interval { a, b } => format!("interval [{a}, {b}]"),
            Domain::Circle { circumference } => format!("circle of length {circumference}"),
        }
    }
}
