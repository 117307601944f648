//! Uniform Bessel-type (WKB) approximation of prolate functions and its
//! Legendre specialization.

use crate::error::{domain, Error, Result};
use crate::pswf::{EigSystemOptions, PswfBasis};
use crate::special::{bessel_j0, legendre_normalized, PhaseIntegral};
use crate::sup::grid_sup;

/// Grid size for every sup norm in this module.
pub const SUP_GRID: usize = 400;

/// The approximant
/// `A χ^{1/4} √S(x) J0(√χ S(x)) / ((1 − x²)^{1/4} (1 − q x²)^{1/4})` for one `ψ_n`,
/// where `q = c²/χ_n < 1` and `S` is the elliptic phase for `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct WkbModel {
    n: usize,
    c: f64,
    chi: f64,
    q: f64,
    amplitude: f64,
    phase: PhaseIntegral,
}

impl WkbModel {
    /// Model for `ψ_n` of `basis`, with `A = ψ_n(1)/χ_n^{1/4}`.
    pub fn new(basis: &PswfBasis, n: usize) -> Result<Self> {
        Self::from_parts(n, basis.c(), basis.chi(n)?, basis.value_at_one(n)?)
    }

    pub fn from_parts(n: usize, c: f64, chi: f64, psi_at_one: f64) -> Result<Self> {
        if !(chi > 0.0) {
            return Err(domain("WkbModel", format!("χ must be positive, got {chi}")));
        }
        let q = c * c / chi;
        if !(q < 1.0) {
            return Err(domain("WkbModel", format!("q = c²/χ must be < 1, got {q}")));
        }
        let amplitude = psi_at_one / chi.powf(0.25);
        if !(amplitude > 0.0) {
            return Err(Error::Invariant(format!("amplitude A = {amplitude} must be positive")));
        }
        Ok(WkbModel {
            n,
            c,
            chi,
            q,
            amplitude,
            phase: PhaseIntegral::new(q)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `A(n, c)`.
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn phase(&self) -> &PhaseIntegral {
        &self.phase
    }

    /// The approximant at `|x| <= 1`, extended to negative `x` with parity `(−1)^n`.
    /// At `x = ±1` it takes its limit `±A χ^{1/4}`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x.abs() <= 1.0) {
            return Err(domain("wkb_eval", format!("|x| must be <= 1, got {x}")));
        }
        let sign = if x < 0.0 && self.n % 2 == 1 { -1.0 } else { 1.0 };
        let t = x.abs();
        let edge = self.amplitude * self.chi.powf(0.25);
        if 1.0 - t < 1e-15 {
            return Ok(sign * edge);
        }
        let s = self.phase.eval(t)?;
        let profile = (s / (((1.0 - t * t) * (1.0 - self.q * t * t)).sqrt())).sqrt();
        Ok(sign * edge * profile * bessel_j0(self.chi.sqrt() * s))
    }

    /// Interval for `A²` given values of the two constants `c_q` and `c_prime`
    /// that the asymptotic theory leaves unspecified; `None` when `χ_n` is too
    /// small for the interval to exist.
    pub fn amplitude_squared_interval(&self, c_q: f64, c_prime: f64) -> Option<(f64, f64)> {
        let s0 = self.phase.at_zero();
        let base = std::f64::consts::PI / (2.0 * s0);
        let root = self.chi.sqrt();
        let denom_lo = 1.0 + base * c_prime / root;
        let denom_hi = 1.0 - base * c_prime / root;
        if denom_hi <= 0.0 {
            return None;
        }
        let lo = ((1.0 - self.q).sqrt() - 2f64.sqrt() * c_q / root).max(0.0);
        let hi = 1.0 + 2f64.sqrt() * c_q / root;
        Some((base * lo * lo / denom_lo, base * hi * hi / denom_hi))
    }
}

/// `√(n+1/2) (θ / sin θ)^{1/2} J0((n+1/2) θ)` with `θ = arccos |x|`, extended to
/// negative `x` with parity `(−1)^n`; equals `√(n+1/2)` at `x = 1`.
pub fn wkb_legendre(n: usize, x: f64) -> f64 {
    let sign = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let t = x.abs().min(1.0);
    let nu = n as f64 + 0.5;
    let theta = t.acos();
    let ratio = if theta < 1e-8 { 1.0 } else { theta / theta.sin() };
    sign * nu.sqrt() * ratio.sqrt() * bessel_j0(nu * theta)
}

/// `sup_{[0,1]} |wkb_legendre(n, ·) − P̄_n|`.
pub fn legendre_wkb_error(n: usize) -> f64 {
    grid_sup(|x| wkb_legendre(n, x) - legendre_normalized(n, x), 0.0, 1.0, SUP_GRID).value
}

/// `D(n, c) = sup_{[-1,1]} |ψ_n − P̄_n|`, computed on `[0, 1]` by parity.
pub fn legendre_proximity(basis: &PswfBasis, n: usize) -> Result<f64> {
    let chi = basis.chi(n)?;
    let q = if chi > 0.0 { basis.c().powi(2) / chi } else { 0.0 };
    if basis.c() > 0.0 && (n == 0 || q > 0.9) {
        return Err(domain("legendre_proximity", format!("needs q <= 0.9, got {q} at n = {n}")));
    }
    Ok(grid_sup(
        |x| basis.eval_inside(n, x).unwrap_or(f64::NAN) - legendre_normalized(n, x),
        0.0,
        1.0,
        SUP_GRID,
    )
    .value)
}

/// `r(n) = sup_{[0,1]} |ψ_n − wkb|`.
pub fn wkb_residual(basis: &PswfBasis, n: usize) -> Result<f64> {
    let model = WkbModel::new(basis, n)?;
    Ok(grid_sup(
        |x| basis.eval_inside(n, x).unwrap_or(f64::NAN) - model.eval(x).unwrap_or(f64::NAN),
        0.0,
        1.0,
        SUP_GRID,
    )
    .value)
}

/// The bandwidth `c` with `c²/χ_n(c) = q`, found by fixed-point iteration on
/// `c = √(q χ_n(c))`, together with the basis up to `n` at that bandwidth.
pub fn bandwidth_for_q(n: usize, q: f64) -> Result<(f64, PswfBasis)> {
    if !(0.0..1.0).contains(&q) {
        return Err(domain("bandwidth_for_q", format!("q must lie in [0, 1), got {q}")));
    }
    let opts = EigSystemOptions::default();
    let mut c = (q * (n * (n + 1)) as f64).sqrt();
    for _ in 0..100 {
        let basis = PswfBasis::build(c, n, &opts)?;
        let next = (q * basis.chi(n)?).sqrt();
        if (next - c).abs() <= 1e-12 * c.max(1.0) {
            let basis = PswfBasis::build(next, n, &opts)?;
            return Ok((next, basis));
        }
        c = next;
    }
    Err(Error::NoConvergence(format!("bandwidth for q = {q}, n = {n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_value_reproduces_psi_at_one() {
        let b = PswfBasis::new(8.0, 20).unwrap();
        let m = WkbModel::new(&b, 20).unwrap();
        assert_eq!(m.eval(1.0).unwrap(), b.value_at_one(20).unwrap());
        let near = m.eval(1.0 - 1e-10).unwrap();
        assert!((near - b.value_at_one(20).unwrap()).abs() < 1e-4);
    }

    #[test]
    fn parity_is_exact() {
        let b = PswfBasis::new(5.0, 11).unwrap();
        for n in [10, 11] {
            let m = WkbModel::new(&b, n).unwrap();
            for &x in &[0.1, 0.5, 0.93] {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(m.eval(-x).unwrap(), sign * m.eval(x).unwrap());
            }
        }
    }

    #[test]
    fn rejects_q_at_least_one() {
        let b = PswfBasis::new(10.0, 3).unwrap();
        assert!(WkbModel::new(&b, 0).is_err());
        assert!(bandwidth_for_q(5, 1.0).is_err());
    }

    #[test]
    fn zero_bandwidth_with_shifted_chi_is_legendre_main_term() {
        // χ → (n + 1/2)² and A = 1 turn the approximant into the Legendre one
        let n = 15;
        let nu: f64 = n as f64 + 0.5;
        let m = WkbModel::from_parts(n, 0.0, nu * nu, nu.sqrt()).unwrap();
        assert!((m.amplitude() - 1.0).abs() < 1e-15);
        for &x in &[0.0, 0.2, 0.77, 0.999] {
            assert!((m.eval(x).unwrap() - wkb_legendre(n, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn legendre_form_at_the_ends() {
        for n in [3usize, 10, 40] {
            assert!((wkb_legendre(n, 1.0) - (n as f64 + 0.5).sqrt()).abs() < 1e-14);
        }
        // P̄_n(0) = √(n+1/2) (−1)^{n/2} (n−1)!!/n!! for even n
        let mut prev_err = f64::INFINITY;
        for n in [10usize, 40, 160] {
            let exact = legendre_normalized(n, 0.0);
            let rel = ((wkb_legendre(n, 0.0) - exact) / exact).abs();
            assert!(rel < prev_err);
            prev_err = rel;
        }
    }

    #[test]
    fn bandwidth_solver_hits_target_q() {
        let (c, b) = bandwidth_for_q(20, 0.3).unwrap();
        assert!((c * c / b.chi(20).unwrap() - 0.3).abs() < 1e-10);
    }
}
