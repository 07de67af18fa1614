use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{from_fourier, FourierSeries};
use crate::functionals::{dirichlet_energy, l2_mass, mean};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenCheck {
    /// Smallest Rayleigh quotient over the nonzero modes.
    pub eigenvalue: f64,
    /// Mode attaining it.
    pub mode: usize,
    /// `(n, ∮e_n'² / ∮(e_n - mean)²)` for each mode checked.
    pub quotients: Vec<(usize, f64)>,
}

/// Rayleigh quotients of the harmonics `cos 2πnx` on the circle of length 1,
/// `1 <= n <= n_max` (clamped to the grid's band), with energies from the
/// spectral derivative. The minimum is the first nonzero Laplacian
/// eigenvalue, `4π²`.
pub fn eigenvalue_check(n: usize, n_max: usize) -> Result<EigenCheck> {
    if n < 64 {
        return Err(LabError::ParamOutOfRange(format!(
            "eigenvalue check needs N >= 64, got {n}"
        )));
    }
    let top = n_max.clamp(1, (n - 1) / 2);
    let quotients: Vec<(usize, f64)> = (1..=top)
        .map(|k| {
            let half = Complex64::new(0.5, 0.0);
            let s = FourierSeries::from_pairs(1.0, [(k as i64, half), (-(k as i64), half)])
                .expect("unit circle series");
            let e = from_fourier(&s, n).expect("band fits grid");
            let centred = e.map(|v| v - mean(&e)).expect("finite samples");
            (k, dirichlet_energy(&e) / l2_mass(&centred))
        })
        .collect();
    let (mode, eigenvalue) =
        quotients.iter().copied().fold(
            (0, f64::INFINITY),
            |best, q| if q.1 < best.1 { q } else { best },
        );
    Ok(EigenCheck {
        eigenvalue,
        mode,
        quotients,
    })
}
