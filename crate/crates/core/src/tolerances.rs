//! Numerical thresholds used across the crate.
//!
//! Every threshold that decides an outcome lives here so the library, the CLI
//! and the test suites agree on the same numbers.

/// Values in `[-CLAMP_NEGATIVE, 0]` are treated as zero by the entropy
/// integrand; anything below is rejected.
pub const CLAMP_NEGATIVE: f64 = 1e-12;

/// Strict positivity floor for the density form and the square-root lift.
pub const POSITIVITY_FLOOR: f64 = 1e-12;

/// Accepted deviation of `∫f²` from 1 for the unit-mass deficits.
pub const NORMALIZATION: f64 = 1e-8;

/// Root mean square below which a function counts as zero.
pub const ZERO_MASS: f64 = 1e-12;

/// Imaginary residue discarded by Fourier synthesis.
pub const REAL_RESIDUE: f64 = 1e-10;

/// Accepted Hermitian asymmetry `|a_{-n} - conj(a_n)|`.
pub const HERMITIAN: f64 = 1e-10;

/// Relative tolerance for matching a circle's circumference against 1.
pub const UNIT_LENGTH: f64 = 1e-9;

/// Deficit floor below which a proven inequality counts as violated.
pub const DEFICIT: f64 = 1e-7;

/// Deficit floor for the optimizer's safety contract.
pub const OPTIMIZER_DEFICIT: f64 = 1e-6;

/// Slack on the optimizer's best ratio above the sharp constant.
pub const OPTIMIZER_RATIO: f64 = 1e-3;

/// Entropy below which an energy/entropy ratio is not recorded.
pub const RATIO_ENTROPY_FLOOR: f64 = 1e-10;

/// Max-norm residual allowed for the perturbed-density ODE.
pub const WANG_RESIDUAL: f64 = 1e-6;

/// Conjecture deficit below which a probe function is flagged.
pub const DIAZ_FLAG: f64 = 1e-7;

/// Accepted deviation of the computed first eigenvalue from `4π²`.
pub const EIGENVALUE: f64 = 1e-8;

/// Default grid sizes and truncation.
pub const DEFAULT_CIRCLE_N: usize = 4096;
pub const DEFAULT_INTERVAL_N: usize = 4097;
pub const DEFAULT_N_MAX: usize = 64;

/// Smallest grid accepted by [`crate::GridFunction`].
pub const MIN_SAMPLES: usize = 16;

/// Largest grid accepted by the CLI.
pub const MAX_SAMPLES: usize = 1 << 24;
