//! Numerical laboratory for operator Jensen-type inequalities.
//!
//! The crate builds finite-dimensional instances of Jensen-type operator
//! inequalities — a convex scalar function `f`, Hermitian operators
//! `A_1..A_n`, and a unital family of positive linear maps `Φ_1..Φ_n` —
//! computes the correction constants that make the inequalities valid
//! without operator convexity, and checks both sides in the Loewner order.
//!
//! Module map:
//! - [`hermitian`]: complex Hermitian matrices, spectral decomposition,
//!   functional calculus, Loewner-order comparison.
//! - [`convexfn`]: registry of convex scalar functions with subgradient
//!   selections and numerical convexity self-checks.
//! - [`posmap`]: positive linear maps (Kraus, compression, pinching,
//!   transpose-composed, scaled identity) and unital families.
//! - [`sphere`]: maximization of `⟨Px,x⟩ − ⟨Qx,x⟩⟨Rx,x⟩` over the complex
//!   unit sphere, plus a dim-2 brute-force oracle.
//! - [`constants`]: the correction constants δ, ζ, β and the Choi-type δ.
//! - [`verify`]: inequality verifiers producing [`verify::VerificationReport`]s.
//! - [`instance`]: seeded instance generation and JSON/CSV serialization.

pub mod constants;
pub mod convexfn;
pub mod error;
pub mod hermitian;
pub mod instance;
pub mod posmap;
pub mod sphere;
pub mod verify;

pub use constants::CorrectionConstants;
pub use convexfn::ConvexScalarFunction;
pub use error::{Error, Result};
pub use hermitian::{HermitianMatrix, SpectralDecomposition, SpectralInterval};
pub use posmap::{PositiveLinearMap, PositiveMapFamily};
pub use sphere::SphereOptResult;
pub use verify::{InequalityInstance, VerificationReport};
