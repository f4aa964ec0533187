//! Exact construction and verification of Hermite and Laguerre standard
//! block orthogonal (SBO) polynomials.
//!
//! Every scalar is an exact rational or a polynomial in the Laguerre
//! parameter α with rational coefficients. Inner products are stored in
//! reduced units, with the common transcendental factor divided out.

// Index loops mirror the subscripts of the underlying formulas.
#![allow(clippy::needless_range_loop)]

pub mod classical;
pub mod error;
pub mod exact;
pub mod measures;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod sbo_hermite;
pub mod sbo_laguerre;
pub mod serialize;
pub mod verify;
pub mod zeros;

pub use classical::Family;
pub use error::{Result, SboError};
pub use exact::{parse_rational, Rational, Scalar};
pub use poly::{AlphaScalar, Parity, Poly, ScaleMode};
pub use report::{Check, Report, Status};
pub use serialize::{Coeff, PolyFamily, PolySerialization};
pub use verify::{run_suite, Grid, Suite};
pub use zeros::{RootInterval, RootReport};
