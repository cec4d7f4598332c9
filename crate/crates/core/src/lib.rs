//! Exact verification of Galois points and Cremona transformations for
//! rational cuspidal plane quartics.
//!
//! Everything is computed over ℚ(ζ₁₂) with arbitrary-precision rationals;
//! no floating point takes part in any decision.

pub mod birational;
pub mod covers;
pub mod error;
pub mod exactnum;
pub mod galoispoints;
pub mod param;
pub mod plane;
pub mod polykernel;
pub mod verifier;

pub use error::{Error, Result};
