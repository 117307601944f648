//! Explicit decay estimates for `λ_n(c)` and the Legendre coefficients, and the
//! truncation heuristics built on them. Everything is evaluated in log space.

use std::f64::consts::{E, PI};

use crate::error::{domain, Result};
use crate::pswf::PswfBasis;
use crate::special::{ln_factorial, ln_gamma_half_integer};

/// `ln λ'` with `λ' = c^{2n+1} (n!)⁴ / (2 ((2n)!)² Γ(n+3/2)²)`, the explicit factor
/// of `λ_n(c)` in its product representation.
pub fn ln_lambda_prime(n: usize, c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(domain("lambda_prime", format!("c must be > 0, got {c}")));
    }
    let n64 = n as u64;
    Ok((2 * n + 1) as f64 * c.ln() + 4.0 * ln_factorial(n64)
        - 2f64.ln()
        - 2.0 * ln_factorial(2 * n64)
        - 2.0 * ln_gamma_half_integer(n))
}

/// `λ'` itself; underflows to 0 once `ln λ' < −745`.
pub fn lambda_prime(n: usize, c: f64) -> Result<f64> {
    Ok(ln_lambda_prime(n, c)?.exp())
}

/// `ln[(c/2) (ec/4n)^{2n}]`, the super-exponential envelope for `λ_n(c)`.
pub fn ln_lambda_envelope(n: usize, c: f64) -> Result<f64> {
    if n == 0 || !(c > 0.0) {
        return Err(domain("lambda_envelope_remark", format!("needs n >= 1 and c > 0, got n = {n}, c = {c}")));
    }
    let nf = n as f64;
    Ok((c / 2.0).ln() + 2.0 * nf * (E * c / (4.0 * nf)).ln())
}

pub fn lambda_envelope_remark(n: usize, c: f64) -> Result<f64> {
    Ok(ln_lambda_envelope(n, c)?.exp())
}

/// `[ec/4]`, where the super-exponential decay of `λ_n(c)` sets in.
pub fn plateau_index(c: f64) -> usize {
    (E * c / 4.0).floor() as usize
}

/// Upper bounds for `|β_k^n|`, with logarithms for the ranges where they underflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientBounds {
    /// `ln[(c/2)^k √π / (Γ(k+3/2) |μ_n|)]`, valid for every `k`.
    pub ln_new: f64,
    /// `ln[2 / (|μ_n| 2^k)]`, only defined for `k >= 2([ec] + 1)`.
    pub ln_old: Option<f64>,
}

impl CoefficientBounds {
    pub fn new_bound(&self) -> f64 {
        self.ln_new.exp()
    }

    pub fn old_bound(&self) -> Option<f64> {
        self.ln_old.map(f64::exp)
    }
}

/// First index from which the older `2/(|μ_n| 2^k)` bound applies.
pub fn old_bound_start(c: f64) -> usize {
    2 * ((E * c).floor() as usize + 1)
}

/// Both Legendre-coefficient bounds for `β_k^n` of `basis`.
pub fn beta_coefficient_bound(basis: &PswfBasis, n: usize, k: usize) -> Result<CoefficientBounds> {
    let c = basis.c();
    let ln_mu = basis.ln_abs_mu(n)?;
    let ln_new = k as f64 * (c / 2.0).ln() + 0.5 * PI.ln() - ln_gamma_half_integer(k) - ln_mu;
    let ln_old = (k >= old_bound_start(c)).then(|| 2f64.ln() - ln_mu - k as f64 * 2f64.ln());
    Ok(CoefficientBounds { ln_new, ln_old })
}

/// Smallest `N` with `√λ_N ‖f‖₂ <= c^{-s} ‖f‖_{H^s}`, or `n_max + 1` when no
/// computed index qualifies.
pub fn truncation_order(basis: &PswfBasis, s: f64, norm_l2: f64, norm_hs: f64) -> Result<usize> {
    if !(norm_l2 > 0.0) || !(norm_hs > 0.0) {
        return Err(domain("truncation_order", "norms must be positive"));
    }
    if norm_hs.is_infinite() {
        return Ok(0);
    }
    let c = basis.c();
    let rhs = -s * c.ln() + norm_hs.ln() - norm_l2.ln();
    let ln_lambda = basis.ln_lambda_all()?;
    Ok(ln_lambda
        .iter()
        .position(|&l| 0.5 * l <= rhs)
        .unwrap_or(basis.n_max() + 1))
}

/// Least-squares slope of `ln λ_n` against `n` over `n ∈ [from, from + width]`.
pub fn ln_lambda_slope(basis: &PswfBasis, from: usize, width: usize) -> Result<f64> {
    let to = from + width;
    basis.check_index(to)?;
    let ln_lambda = basis.ln_lambda_all()?;
    let pts: Vec<(f64, f64)> = (from..=to).map(|n| (n as f64, ln_lambda[n])).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Indices `n >= from` at which `λ_n` exceeds the super-exponential envelope.
pub fn envelope_violations(basis: &PswfBasis, from: usize) -> Result<Vec<usize>> {
    let c = basis.c();
    let ln_lambda = basis.ln_lambda_all()?;
    let mut out = Vec::new();
    for (n, &l) in ln_lambda.iter().enumerate().skip(from.max(1)) {
        if l > ln_lambda_envelope(n, c)? {
            out.push(n);
        }
    }
    Ok(out)
}
