//! Numerical core for reconstructing band-limited sensor signals from
//! time-equispaced samples without tripping over the Runge phenomenon.
//!
//! The crate provides:
//!
//! * barycentric polynomial and Floater–Hormann (FH) rational interpolation
//!   on equispaced and Chebyshev nodes, including the borrowing-and-cutting
//!   (BAC) variants that interpolate over neighbouring samples but evaluate
//!   only on the central sub-interval ([`interp`]),
//! * Lebesgue function/constant computation with the known conditioning
//!   bounds attached as metadata ([`lebesgue`]),
//! * truncated Chebyshev series with fitting, Clenshaw evaluation,
//!   differentiation, integration and products ([`chebyshev`]),
//! * a coning-motion truth model and gyroscope angular-increment synthesis
//!   with optional noise ([`motion`]),
//! * angular-velocity reconstruction from increment windows and attitude
//!   integration by functional (Picard) iteration ([`attitude`]),
//! * slow, independently-coded reference evaluators used by the self-test
//!   and oracle suites ([`oracle`]).
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod attitude;
pub mod chebyshev;
mod error;
pub mod grid;
pub mod interp;
pub mod lebesgue;
pub mod motion;
pub mod oracle;
pub mod quaternion;
pub mod value;
pub mod weights;

pub use error::Error;
pub use quaternion::Quaternion;
pub use value::Vec3;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
