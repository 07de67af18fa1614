//! Domains, sampled functions, quadrature, differentiation and Fourier
//! coefficients.
//!
//! Interval grids include both endpoints; circle grids exclude the wrap
//! point. Every operation here is a pure function of immutable inputs.

mod derivative;
mod domain;
mod family;
mod fourier;
mod grid;
mod quadrature;

pub use derivative::{differentiate, fd_derivative};
pub(crate) use derivative::{fd_derivative_transpose, spectral_derivative};
pub use domain::Domain;
pub use family::{sample_family, Family};
pub use fourier::{from_fourier, to_fourier, FourierSeries};
pub use grid::GridFunction;
pub use quadrature::{integrate, integrate_values, quadrature_weights};
