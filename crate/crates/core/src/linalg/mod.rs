//! Exact integer linear algebra: matrices, polynomials, and spectral
//! multiplicity profiles.

pub mod matrix;
pub mod poly;
pub mod profile;

pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use profile::{
    integer_eigenvalue_multiplicity, multiplicity_profile, quotient_matrix, verify_eigenvector,
    ProfileError, SpectralProfile, SquareFreePart,
};
