//! Finite-field arithmetic, permutation-polynomial constructions and
//! exhaustive verification oracles.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: GF(p^n) and quadratic/cubic towers with integer encodings.
//! - [`poly`]: sparse polynomials with fractional exponents, black-box maps,
//!   Dickson and linearized polynomials, interpolation.
//! - [`verify`]: brute-force permutation, o-polynomial and hyperoval oracles.
//! - [`opoly`]: the o-polynomial families over GF(2^m) and their transforms.
//! - [`construct`]: lifting maps from GF(q) to GF(q^2) and GF(q^3).
//! - [`suites`]: named parameter sweeps with CSV output.

pub mod construct;
pub mod error;
pub mod field;
pub mod numtheory;
pub mod opoly;
pub mod poly;
pub mod suites;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Elem, FieldCtx, FracExp};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/opolynomials.md")]
    mod opolynomials {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
