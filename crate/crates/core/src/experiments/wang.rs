use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{differentiate, sample_family, Domain, Family};

pub const MIN_WANG_N: usize = 513;

/// Max-norm residual of `f'' - πε sin(πx) f' + π² f log f` for
/// `f = exp(-ε cos πx)` on `[0, 1]`, both derivatives from [`differentiate`].
///
/// The identity is exact in the continuum, so the residual is pure
/// discretization and round-off error.
pub fn wang_ode_residual(eps: f64, n: usize) -> Result<f64> {
    if n < MIN_WANG_N {
        return Err(LabError::ParamOutOfRange(format!(
            "ODE check needs N >= {MIN_WANG_N}, got {n}"
        )));
    }
    let f = sample_family(&Family::Wang { epsilon: eps }, &Domain::unit_interval(), n)?;
    let d1 = differentiate(&f);
    let d2 = differentiate(&d1);
    let x = f.nodes();
    let residual = (0..n)
        .map(|i| {
            let v = f.values()[i];
            let lhs = d2.values()[i] - PI * eps * (PI * x[i]).sin() * d1.values()[i];
            (lhs + PI * PI * v * v.ln()).abs()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WangConvergence {
    pub coarse_n: usize,
    pub fine_n: usize,
    pub coarse_residual: f64,
    pub fine_residual: f64,
    /// `coarse_residual / fine_residual`.
    pub reduction: f64,
    /// `log4(reduction)`: the observed order for a fourfold refinement.
    pub order: f64,
}

/// Residual at `coarse_n` and at the nested grid with four times as many
/// panels, `4 (coarse_n - 1) + 1`.
pub fn wang_convergence(eps: f64, coarse_n: usize) -> Result<WangConvergence> {
    let fine_n = 4 * (coarse_n - 1) + 1;
    let coarse_residual = wang_ode_residual(eps, coarse_n)?;
    let fine_residual = wang_ode_residual(eps, fine_n)?;
    let reduction = coarse_residual / fine_residual;
    Ok(WangConvergence {
        coarse_n,
        fine_n,
        coarse_residual,
        fine_residual,
        reduction,
        order: reduction.ln() / 4f64.ln(),
    })
}
