//! Runnable experiments behind the sharp constants.
//!
//! Sweeps and probes fan out over rayon; every task is a pure function of its
//! inputs and results are collected in input order, so a fixed seed yields
//! bit-identical output.

mod diaz_probe;
mod eigen;
mod optimizer;
mod sweep;
mod wang;

pub use diaz_probe::{diaz_probe, diaz_probe_with, DiazProbeReport, DiazQSummary, ProbeSettings};
pub use eigen::{eigenvalue_check, EigenCheck};
pub use optimizer::{
    minimize_deficit, minimize_deficit_with, Basis, Init, OptimizerConfig, OptimizerResult,
};
pub use sweep::{extrapolate_constant, sharpness_sweep, SweepRecord};
pub use wang::{wang_convergence, wang_ode_residual, WangConvergence};
