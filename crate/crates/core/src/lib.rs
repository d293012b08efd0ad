//! Exact construction of E6 from its root lattice, its realization by
//! first-order differential operators in 16 variables, and the functor from
//! D5-modules to E6-modules built on top of it.

pub mod chevalley;
pub mod d5modules;
pub mod e6rep;
pub mod error;
pub mod flows;
pub mod functor;
pub mod lattice;
pub mod linalg;
pub mod o10;
pub mod polydiff;
pub mod report;
pub mod scalar;

pub use error::Error;
pub use scalar::{Exact, Scalar};

/// Default exact scalar.
pub type Q = num_rational::Rational64;
/// Overflow-free fallback scalar.
pub type BigQ = num_rational::BigRational;

pub type Poly = polydiff::Poly<Q>;
pub type DiffOp = polydiff::DiffOp<Q>;
pub type LieElement = chevalley::LieElement<Q>;


