//! Prolate spheroidal wave functions: the Legendre-coefficient eigensystem,
//! evaluation inside and outside [-1, 1], and the eigenvalues `μ_n`, `λ_n`.

mod basis;
mod cache;
mod eigensystem;

pub use basis::{EigSystemOptions, PswfBasis};
pub use cache::FORMAT_VERSION;
