//! Legendre polynomials normalized to unit L² norm on [-1, 1].
//!
//! `P̄_n(x) = sqrt(n + 1/2) P_n(x)`, so that `∫ P̄_m P̄_n dx = δ_mn`.

use crate::error::{domain, Result};

#[inline]
fn norm(n: usize) -> f64 {
    (n as f64 + 0.5).sqrt()
}

/// Normalized Legendre polynomial `P̄_n(x)` by the three-term recurrence.
pub fn legendre_normalized(n: usize, x: f64) -> f64 {
    let (p, _) = legendre_pair(n, x);
    norm(n) * p
}

/// Returns `(P_n(x), P_{n-1}(x))` for the classical (unnormalized) polynomials.
/// For `n = 0` the second entry is 0.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// All normalized Legendre values `P̄_0(x), ..., P̄_kmax(x)`.
pub fn legendre_normalized_all(kmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(kmax + 1);
    let mut p_prev = 0.0;
    let mut p = 1.0;
    for k in 0..=kmax {
        out.push(norm(k) * p);
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    out
}

/// First derivative of `P̄_n` for `|x| < 1`, from
/// `(1 - x²) P_n'(x) = n (P_{n-1}(x) - x P_n(x))`.
pub fn legendre_normalized_deriv(n: usize, x: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(domain(
            "legendre_normalized_deriv",
            format!("|x| must be < 1, got {x}"),
        ));
    }
    if n == 0 {
        return Ok(0.0);
    }
    let (p, p_prev) = legendre_pair(n, x);
    let d = n as f64 * (p_prev - x * p) / (1.0 - x * x);
    Ok(norm(n) * d)
}

/// Derivative of order `order` of `P̄_n` at any `x`, using
/// `P_n^{(m)}(x) = (2m - 1)!! C^{(m + 1/2)}_{n - m}(x)` with the Gegenbauer recurrence.
/// Valid on the closed interval, including the endpoints.
pub fn legendre_normalized_deriv_order(n: usize, order: usize, x: f64) -> f64 {
    if order > n {
        return 0.0;
    }
    if order == 0 {
        return legendre_normalized(n, x);
    }
    let alpha = order as f64 + 0.5;
    let deg = n - order;
    let mut c_prev = 1.0;
    let mut c = if deg == 0 { 1.0 } else { 2.0 * alpha * x };
    for j in 2..=deg {
        let jf = j as f64;
        let next = (2.0 * x * (jf + alpha - 1.0) * c - (jf + 2.0 * alpha - 2.0) * c_prev) / jf;
        c_prev = c;
        c = next;
    }
    let mut dfact = 1.0;
    for i in 1..=order {
        dfact *= (2 * i - 1) as f64;
    }
    norm(n) * dfact * c
}

/// Clenshaw summation of `Σ_k coeffs[k] P̄_k(x)`.
pub fn clenshaw_normalized(coeffs: &[f64], x: f64) -> f64 {
    let len = coeffs.len();
    if len == 0 {
        return 0.0;
    }
    // P̄_{k+1} = a_k(x) P̄_k + g_k P̄_{k-1}
    let a = |k: usize| {
        let kf = k as f64;
        x * ((2.0 * kf + 1.0) * (2.0 * kf + 3.0)).sqrt() / (kf + 1.0)
    };
    let g = |k: usize| {
        let kf = k as f64;
        -(kf / (kf + 1.0)) * ((2.0 * kf + 3.0) / (2.0 * kf - 1.0)).sqrt()
    };
    let mut b1 = 0.0; // b_{k+1}
    let mut b2 = 0.0; // b_{k+2}
    for k in (1..len).rev() {
        let bk = coeffs[k] + a(k) * b1 + g(k + 1) * b2;
        b2 = b1;
        b1 = bk;
    }
    let p0 = std::f64::consts::FRAC_1_SQRT_2;
    let p1 = (1.5f64).sqrt() * x;
    coeffs[0] * p0 + b1 * p1 + g(1) * p0 * b2
}
