//! Superimposed codes and non-adaptive group-testing designs.
//!
//! * [`field`]: arithmetic in GF(q).
//! * [`codegen`]: shortened Reed-Solomon codes, binary expansion, parameter
//!   search and random codes.
//! * [`verify`]: exhaustive and certificate checks of code and design
//!   properties.
//! * [`bounds`]: numerical upper and lower bounds on achievable rates.
//! * [`io`]: the plain-text matrix format.
//!
//! The bound routines are generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64` or `f32`.

pub mod bounds;
pub mod codegen;
mod error;
pub mod field;
pub mod io;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub use codegen::{binary_expand, rs_extended, rs_shortened, shorten, BinaryCode, CodeParams, QaryCode};
pub use field::{FieldElement, FiniteField};
pub use verify::{CheckConfig, VerificationReport, Witness};

pub type RateBoundF64 = bounds::RateBound<f64>;
pub type RateBoundF32 = bounds::RateBound<f32>;
pub type UpperZuTableF64 = bounds::UpperZuTable<f64>;
pub type UpperZuTableF32 = bounds::UpperZuTable<f32>;
pub type OptimizerF64 = bounds::Optimizer<f64>;
pub type OptimizerF32 = bounds::Optimizer<f32>;
