//! Prolate spheroidal wave functions of the finite Fourier transform on
//! `[-1, 1]`: eigenpairs, WKB approximations, eigenvalue and coefficient
//! bounds, and spectral expansions with computable error bounds.

// NaN inputs must fail validation, hence `!(x > 0.0)` rather than `x <= 0.0`
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod bounds;
pub mod checks;
pub mod corpus;
pub mod error;
pub mod pswf;
pub mod reproduce;
pub mod special;
pub mod spectral;
pub mod sup;
pub mod wkb;

pub use error::{Error, Result};
pub use pswf::{EigSystemOptions, PswfBasis};
