use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{LabError, Result};
use crate::tolerances::{HERMITIAN, REAL_RESIDUE};

use super::{Domain, GridFunction};

/// Two-sided Fourier coefficients `a_n`, `|n| <= n_max`, of a periodic
/// function `f(x) = Σ a_n exp(2πinx/L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    circumference: f64,
    n_max: usize,
    coefficients: Vec<Complex64>,
}

impl FourierSeries {
    /// Builds a series from `(n, a_n)` pairs; missing modes are zero.
    pub fn from_pairs(
        circumference: f64,
        pairs: impl IntoIterator<Item = (i64, Complex64)>,
    ) -> Result<Self> {
        Domain::circle(circumference)?;
        let pairs: Vec<_> = pairs.into_iter().collect();
        let n_max = pairs
            .iter()
            .map(|(n, _)| n.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let mut coefficients = vec![Complex64::new(0.0, 0.0); 2 * n_max + 1];
        for (n, a) in pairs {
            if !(a.re.is_finite() && a.im.is_finite()) {
                return Err(LabError::ParamOutOfRange(format!(
                    "coefficient a_{n} is not finite"
                )));
            }
            coefficients[(n + n_max as i64) as usize] = a;
        }
        Ok(Self {
            circumference,
            n_max,
            coefficients,
        })
    }

    /// Real series from a constant term and one-sided cosine/sine weights:
    /// `f = c0 + Σ_{k>=1} (cos_k cos(2πkx/L) + sin_k sin(2πkx/L))`.
    pub fn from_real_modes(circumference: f64, c0: f64, cos: &[f64], sin: &[f64]) -> Result<Self> {
        let n_max = cos.len().max(sin.len());
        let mut pairs = vec![(0, Complex64::new(c0, 0.0))];
        for k in 1..=n_max {
            let a = cos.get(k - 1).copied().unwrap_or(0.0);
            let b = sin.get(k - 1).copied().unwrap_or(0.0);
            let c = Complex64::new(a / 2.0, -b / 2.0);
            pairs.push((k as i64, c));
            pairs.push((-(k as i64), c.conj()));
        }
        Self::from_pairs(circumference, pairs)
    }

    pub fn circumference(&self) -> f64 {
        self.circumference
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `a_n`, zero outside the stored band.
    pub fn coefficient(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.n_max {
            return Complex64::new(0.0, 0.0);
        }
        self.coefficients[(n + self.n_max as i64) as usize]
    }

    /// `(n, a_n)` for `n = -n_max..=n_max`.
    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let n_max = self.n_max as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &a)| (i as i64 - n_max, a))
    }

    /// Parseval mass `Σ |a_n|²`.
    pub fn mass(&self) -> f64 {
        self.coefficients.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Largest `|a_{-n} - conj(a_n)|`.
    pub fn hermitian_defect(&self) -> f64 {
        (0..=self.n_max as i64)
            .map(|n| (self.coefficient(-n) - self.coefficient(n).conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn check_hermitian(&self) -> Result<()> {
        let defect = self.hermitian_defect();
        let scale = self
            .coefficients
            .iter()
            .fold(1.0_f64, |m, a| m.max(a.norm()));
        if defect > HERMITIAN * scale {
            return Err(LabError::NotHermitian(defect));
        }
        Ok(())
    }
}

/// Coefficients `a_n = (1/L) ∮ f exp(-2πinx/L) dx` by the periodic trapezoid
/// rule, symmetrized so that `a_{-n} = conj(a_n)` holds exactly.
pub fn to_fourier(f: &GridFunction, n_max: usize) -> Result<FourierSeries> {
    let circumference = match *f.domain() {
        Domain::Circle { circumference } => circumference,
        Domain::Interval { .. } => {
            return Err(LabError::DomainMismatch(
                "Fourier coefficients need a circle".into(),
            ))
        }
    };
    let n = f.len();
    if 2 * n_max + 1 > n {
        return Err(LabError::TruncationTooLarge { n_max, n });
    }
    let mut buf: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::<f64>::new()
        .plan_fft_forward(n)
        .process(&mut buf);
    let scale = 1.0 / n as f64;
    let bin = |k: i64| buf[k.rem_euclid(n as i64) as usize] * scale;

    let mut coefficients = vec![Complex64::new(0.0, 0.0); 2 * n_max + 1];
    coefficients[n_max] = Complex64::new(bin(0).re, 0.0);
    for k in 1..=n_max as i64 {
        let a = (bin(k) + bin(-k).conj()) * 0.5;
        coefficients[n_max + k as usize] = a;
        coefficients[n_max - k as usize] = a.conj();
    }
    Ok(FourierSeries {
        circumference,
        n_max,
        coefficients,
    })
}

/// Pointwise synthesis of `s` on the `n`-point periodic grid.
pub fn from_fourier(s: &FourierSeries, n: usize) -> Result<GridFunction> {
    if n < 2 * s.n_max + 1 {
        return Err(LabError::TruncationTooLarge { n_max: s.n_max, n });
    }
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for (k, a) in s.modes() {
        buf[k.rem_euclid(n as i64) as usize] = a;
    }
    FftPlanner::<f64>::new()
        .plan_fft_inverse(n)
        .process(&mut buf);
    let scale = s.coefficients.iter().fold(1.0_f64, |m, a| m.max(a.norm()));
    let residue = buf.iter().fold(0.0_f64, |m, c| m.max(c.im.abs()));
    if residue > REAL_RESIDUE * scale {
        return Err(LabError::NotRealValued(residue));
    }
    GridFunction::new(
        Domain::circle(s.circumference)?,
        buf.into_iter().map(|c| c.re).collect(),
    )
}
