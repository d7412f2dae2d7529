//! Dense complex linear algebra: matrices, polynomials, and spectral
//! calculus for unitary matrices.

mod matrix;
mod poly;
mod spectral;

pub use matrix::ComplexMatrix;
pub use poly::{format_complex, Polynomial};
pub use spectral::{
    eigendecompose_unitary, is_unitary, matrix_function, minimal_polynomial, scalar_power_check,
    smallest_scalar_power, spectral_function_oracle, SpectralFunction, Spectrum,
};

/// Tolerance used wherever a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Eigenvalues closer than this are treated as equal.
pub const CLUSTER_TOL: f64 = 1e-7;
