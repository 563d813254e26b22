//! Exact computation of convolution powers of quadratic power series, their
//! shifted Hankel determinants `D_{K,M}(N)`, the determinant identities those
//! determinants satisfy, and the quadratic transformation that explains their
//! shifted-periodic behaviour.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! there is no floating point anywhere in the crate.

pub mod error;
pub mod families;
pub mod hankel;
pub mod identities;
pub mod series;
pub mod tau;

pub use error::{Error, Result};
pub use series::{Polynomial, PowerSeries, Rational, RationalFunction, Valuation};
