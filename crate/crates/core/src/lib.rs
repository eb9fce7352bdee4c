//! Outgoing self-similar blow-up profiles for the one-dimensional NLS with a
//! focusing point nonlinearity.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function of
//! its arguments.
#![no_std]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
mod cmath;
pub mod error;
pub mod matching;
pub mod profile;
pub mod quad;
mod ray;
pub mod roots;
pub mod solver;
pub mod specfun;
pub mod weber;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use quad::QuadratureConfig;
pub use weber::SpectralParams;
