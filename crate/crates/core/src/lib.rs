//! Exact q-supernomials, graded characters of sl2 fusion modules and affine
//! sl2 Demazure modules, and the moment statistics of their coefficient
//! distributions.
//!
//! Everything here is exact: polynomials carry arbitrary-precision integer
//! coefficients and moments are big rationals. Floating point only shows up in
//! the normal-approximation diagnostics of [`stats`].

#![no_std]

extern crate alloc;

mod error;
pub mod limits;

pub mod affinechar;
pub mod exactpoly;
pub mod kostka;
pub mod stats;
pub mod supernomial;

pub use error::{Error, Result};
pub use exactpoly::{CharPoly, QPoly, RatPoly, Rational};
