//! Factorization and root finding for polynomials with coefficients in a
//! rational quaternion division algebra.

pub mod arith;
pub mod error;
pub mod numberfield;
pub mod qpoly;
pub mod quadform;
pub mod quatalg;

pub use error::{Error, Result};
