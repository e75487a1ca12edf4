//! Continuous-time quantum walks on graphs.
//!
//! The crate has an exact layer (integer characteristic polynomials,
//! rational functions, cospectrality decisions) and a numeric layer
//! (Jacobi eigendecomposition, eigenprojectors, fidelity of
//! `U(t) = exp(itA)`). Perfect-state-transfer certificates combine both.
//!
//! Numeric routines are generic over [`Real`]; the aliases below fix the
//! common double-precision choices.

pub mod graph;
pub mod linalg;
pub mod poly;
pub mod pst;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use graph::{Graph, GraphError, MarkedGraph};
pub use poly::{IntPoly, PolyError, RationalFunction};
pub use pst::{PstCertificate, PstError};
pub use scalar::{IntegralDomain, Real, Sign};
pub use spectral::{SpectralError, SupportSignature, Tolerances};

/// Arbitrary-precision integer used by the exact layer.
pub type Integer = num_bigint::BigInt;
/// Exact rational used for interpolation and exact evaluation.
pub type Rational = num_rational::BigRational;

pub type Matrix = linalg::Matrix<f64>;
pub type Matrix32 = linalg::Matrix<f32>;
pub type SpectralDecomposition = spectral::SpectralDecomposition<f64>;
pub type SpectralDecomposition32 = spectral::SpectralDecomposition<f32>;
