//! Special-function kernel: normalized Legendre polynomials, Bessel functions,
//! half-integer Gamma values, the elliptic phase integral and Gauss–Legendre rules.

pub mod bessel;
pub mod gamma;
pub mod legendre;
pub mod phase;
pub mod quadrature;

pub use bessel::{
    bessel_integer, bessel_j0, bessel_j0j1y0, bessel_j1, bessel_j_half, bessel_j_half_all,
    BesselValues,
};
pub use gamma::{gamma_half_integer, ln_factorial, ln_gamma, ln_gamma_half_integer};
pub use legendre::{
    clenshaw_normalized, legendre_normalized, legendre_normalized_all, legendre_normalized_deriv,
    legendre_normalized_deriv_order,
};
pub use phase::{phase_s, PhaseIntegral};
pub use quadrature::{gauss_legendre, integrate_adaptive, QuadratureRule};
