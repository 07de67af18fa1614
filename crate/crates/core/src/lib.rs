//! Numerical laboratory for sharp log-Sobolev inequalities on the unit
//! interval and the unit circle.
//!
//! The crate is layered bottom-up:
//!
//! - [`function_space`]: domains, sampled functions, quadrature,
//!   differentiation and Fourier coefficients.
//! - [`functionals`]: entropy, Dirichlet energy and every deficit functional
//!   (interval, circle, arbitrary interval, density form, Fourier bound,
//!   Wirtinger, and the open isoperimetric conjecture).
//! - [`transforms`]: reflection doubling, affine normalization and the
//!   square-root lift, each returning a certificate of its identities.
//! - [`experiments`]: sharpness sweeps, Richardson extrapolation, the
//!   perturbed-density ODE check, deficit minimization, the conjecture probe
//!   and the Laplacian eigenvalue check.
//! - [`cli`]: the batch command-line front end.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod function_space;
pub mod functionals;
pub mod tolerances;
pub mod transforms;

pub use error::{LabError, Result};
pub use function_space::{
    differentiate, from_fourier, integrate, sample_family, to_fourier, Domain, Family,
    FourierSeries, GridFunction,
};
pub use functionals::FunctionalReport;
