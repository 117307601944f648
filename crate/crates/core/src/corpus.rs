//! Test functions with their closed-form data: Weierstrass-type lacunary
//! series, a random cosine series modelling Brownian motion, complex
//! exponentials and monomials.
//!
//! Members are addressable by name, e.g. `weierstrass:s=1.4:periodic`,
//! `brownian:s=1:seed=7`, `exponential:lambda=50`, `monomial:j=3`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{domain, Error, Result};
use crate::spectral::{FourierData, FunctionSpec};
use crate::special::bessel_j_half_all;

pub const DEFAULT_K_CUT: u32 = 60;
pub const DEFAULT_K_MAX: u32 = 500;

/// `Σ_{k=0}^{k_cut} 2^{−ks} cos(2^k x)`, or `cos(2^k πx)` when `periodic`.
///
/// The omitted tail is at most `2^{−(k_cut+1)s} / (1 − 2^{−s})` uniformly. The
/// periodic variant carries its Fourier data, `b_{±2^k} = 2^{−ks}/√2`, and the
/// closed-form norm `‖f‖₂ = (1 − 2^{−2s})^{−1/2}`.
pub fn weierstrass(s: f64, periodic: bool, k_cut: u32) -> Result<FunctionSpec> {
    if !(s > 0.0) {
        return Err(domain("weierstrass", format!("s must be > 0, got {s}")));
    }
    if k_cut > 62 {
        return Err(domain("weierstrass", format!("k_cut must be <= 62, got {k_cut}")));
    }
    let name = format!("weierstrass:s={s}{}:kcut={k_cut}", if periodic { ":periodic" } else { "" });
    let amp = |k: u32| (-(k as f64) * s * 2f64.ln()).exp();
    if periodic {
        let data = FourierData::cosine_series((0..=k_cut).map(|k| (1u64 << k, amp(k))))?;
        let closed = (1.0 - (-2.0 * s * 2f64.ln()).exp()).powf(-0.5);
        let amps: Vec<(f64, f64)> = (0..=k_cut).map(|k| ((1u64 << k) as f64 * PI, amp(k))).collect();
        let spec = FunctionSpec::from_fourier(name, data)
            .with_norm_l2(closed)
            .with_smoothness(s);
        return Ok(replace_sampler(spec, amps));
    }
    let terms = (0..=k_cut)
        .flat_map(|k| {
            let w = (1u64 << k) as f64;
            let a = Complex64::new(0.5 * amp(k), 0.0);
            [(w, a), (-w, a)]
        })
        .collect();
    let amps: Vec<(f64, f64)> = (0..=k_cut).map(|k| ((1u64 << k) as f64, amp(k))).collect();
    let spec = FunctionSpec::from_exponentials(name, terms)?.with_smoothness(s);
    Ok(replace_sampler(spec, amps))
}

/// Same closed-form data with a real cosine-sum sampler `Σ a cos(ω x)`.
fn replace_sampler(spec: FunctionSpec, amps: Vec<(f64, f64)>) -> FunctionSpec {
    spec.with_sampler(move |x| Complex64::new(amps.iter().map(|&(w, a)| a * (w * x).cos()).sum(), 0.0))
}

/// `B_s(x) = Σ_{k=1}^{k_max} X_k k^{−s} cos(kπx)`.
///
/// `X_1, …, X_{k_max}` are drawn in order from the standard normal
/// distribution (`rand_distr::StandardNormal`) driven by
/// `ChaCha20Rng::seed_from_u64(seed)`. This generator and order are part of
/// the output contract: a seed names one path.
pub fn brownian(s: f64, seed: u64, k_max: u32) -> Result<FunctionSpec> {
    if !(s > 0.0) {
        return Err(domain("brownian", format!("s must be > 0, got {s}")));
    }
    let xs = brownian_weights(seed, k_max);
    let amps: Vec<(f64, f64)> = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let k = (i + 1) as f64;
            (k * PI, x * k.powf(-s))
        })
        .collect();
    let data = FourierData::cosine_series(amps.iter().enumerate().map(|(i, a)| ((i + 1) as u64, a.1)))?;
    let spec = FunctionSpec::from_fourier(format!("brownian:s={s}:seed={seed}:kmax={k_max}"), data);
    Ok(replace_sampler(spec, amps))
}

/// The standard normal draws `X_1, …, X_{k_max}` behind [`brownian`].
pub fn brownian_weights(seed: u64, k_max: u32) -> Vec<f64> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..k_max).map(|_| StandardNormal.sample(&mut rng)).collect()
}

/// `e^{iλx}`, with `‖·‖₂ = √2`.
pub fn exponential(lambda: f64) -> Result<FunctionSpec> {
    Ok(FunctionSpec::from_exponentials(format!("exponential:lambda={lambda}"), vec![(lambda, Complex64::new(1.0, 0.0))])?
        .with_norm_l2(2f64.sqrt()))
}

pub fn monomial(j: u32) -> FunctionSpec {
    FunctionSpec::monomial(j)
}

/// Coefficients of `e^{iλx}` in the normalized Legendre basis,
/// `α_n = iⁿ √(n+1/2) √(2π/λ) J_{n+1/2}(λ)` for `n < count`.
pub fn exponential_legendre_coefficients(lambda: f64, count: usize) -> Result<Vec<Complex64>> {
    if !(lambda > 0.0) {
        return Err(domain("exponential_legendre_coefficients", format!("λ must be > 0, got {lambda}")));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let j = bessel_j_half_all(count - 1, lambda);
    let scale = (2.0 * PI / lambda).sqrt();
    Ok(j.iter()
        .enumerate()
        .map(|(n, &jn)| {
            let turn = [
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, -1.0),
            ][n % 4];
            turn * scale * (n as f64 + 0.5).sqrt() * jn
        })
        .collect())
}

/// `‖e^{iλ·} − Σ_{n<N} α_n P̄_n‖₂ = ((2π/λ) Σ_{n>=N} (n+1/2) J_{n+1/2}(λ)²)^{1/2}`,
/// summed directly so that small errors keep relative accuracy.
pub fn exponential_legendre_error(lambda: f64, n_terms: usize) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(domain("exponential_legendre_error", format!("λ must be > 0, got {lambda}")));
    }
    // J_{n+1/2}(λ) is below 1e-40 once n exceeds λ by this margin
    let top = n_terms.max(lambda.ceil() as usize) + 80 + lambda.ceil() as usize / 2;
    let j = bessel_j_half_all(top, lambda);
    let tail: f64 = (n_terms..=top).map(|n| (n as f64 + 0.5) * j[n] * j[n]).sum();
    Ok((2.0 * PI / lambda * tail).sqrt())
}

/// Parses `name[:key=value|flag]…`.
pub fn parse_member(text: &str) -> Result<FunctionSpec> {
    let mut parts = text.split(':');
    let kind = parts.next().unwrap_or_default();
    let mut periodic = false;
    let mut params: Vec<(&str, &str)> = Vec::new();
    for p in parts {
        match p.split_once('=') {
            Some((k, v)) => params.push((k, v)),
            None if p == "periodic" => periodic = true,
            None => return Err(Error::InvalidInput(format!("unknown flag '{p}' in '{text}'"))),
        }
    }
    let get = |key: &str| params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    let num = |key: &str| -> Result<Option<f64>> {
        get(key)
            .map(|v| v.parse::<f64>().map_err(|_| Error::InvalidInput(format!("bad value for {key}: '{v}'"))))
            .transpose()
    };
    let int = |key: &str| -> Result<Option<u64>> {
        get(key)
            .map(|v| v.parse::<u64>().map_err(|_| Error::InvalidInput(format!("bad value for {key}: '{v}'"))))
            .transpose()
    };
    let known: &[&str] = match kind {
        "weierstrass" => &["s", "kcut"],
        "brownian" => &["s", "seed", "kmax"],
        "exponential" => &["lambda"],
        "monomial" => &["j"],
        _ => return Err(Error::InvalidInput(format!("unknown corpus member '{kind}'"))),
    };
    if let Some((k, _)) = params.iter().find(|(k, _)| !known.contains(k)) {
        return Err(Error::InvalidInput(format!("unknown parameter '{k}' for {kind}")));
    }
    if periodic && kind != "weierstrass" {
        return Err(Error::InvalidInput(format!("'periodic' does not apply to {kind}")));
    }
    let need = |v: Option<f64>, key: &str| v.ok_or_else(|| Error::InvalidInput(format!("{kind} needs {key}=…")));
    let small = |v: Option<u64>, default: u32| -> Result<u32> {
        v.map_or(Ok(default), |x| u32::try_from(x).map_err(|_| Error::InvalidInput(format!("{x} too large"))))
    };
    match kind {
        "weierstrass" => weierstrass(need(num("s")?, "s")?, periodic, small(int("kcut")?, DEFAULT_K_CUT)?),
        "brownian" => brownian(
            need(num("s")?, "s")?,
            int("seed")?.unwrap_or(0),
            small(int("kmax")?, DEFAULT_K_MAX)?,
        ),
        "exponential" => exponential(need(num("lambda")?, "lambda")?),
        _ => Ok(monomial(small(int("j")?, 0)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gauss_legendre;

    #[test]
    fn periodic_weierstrass_norms() {
        let f = weierstrass(1.4, true, DEFAULT_K_CUT).unwrap();
        assert!((f.norm_l2().unwrap() - 1.080_583_8).abs() < 1e-7);
        let data = f.fourier().unwrap();
        assert!((data.norm_l2() - f.norm_l2().unwrap()).abs() < 1e-15);
        assert!(data.is_real());
        // components with 2^k > 31 for bandwidth 100
        let tail = data.sobolev_tail_norm(1.0, (100.0 / PI).floor() as u64 + 1);
        assert!((tail - 1.203_854).abs() < 1e-6, "{tail}");
        let x = 0.37;
        assert!((f.sample(x) - data.sample(x)).norm() < 1e-13);
    }

    #[test]
    fn weierstrass_is_even_and_truncation_is_geometric() {
        for periodic in [false, true] {
            let f = weierstrass(0.75, periodic, 20).unwrap();
            let g = weierstrass(0.75, periodic, 50).unwrap();
            let bound = (-(21.0 * 0.75) * 2f64.ln()).exp() / (1.0 - (-0.75 * 2f64.ln()).exp());
            for &x in &[0.0, 0.13, 0.5, 0.91] {
                assert_eq!(f.sample(x), f.sample(-x));
                assert!((f.sample(x) - g.sample(x)).norm() <= bound);
            }
        }
        assert!(weierstrass(0.0, false, 10).is_err());
    }

    #[test]
    fn brownian_is_deterministic_and_even() {
        let a = brownian(1.0, 7, 200).unwrap();
        let b = brownian(1.0, 7, 200).unwrap();
        let c = brownian(1.0, 8, 200).unwrap();
        for &x in &[-0.8, 0.0, 0.33] {
            assert_eq!(a.sample(x).re.to_bits(), b.sample(x).re.to_bits());
            assert_eq!(a.sample(x), a.sample(-x));
        }
        assert_ne!(a.sample(0.33), c.sample(0.33));
    }

    #[test]
    fn brownian_norm_by_plancherel_and_quadrature() {
        let f = brownian(1.0, 3, 60).unwrap();
        let xs = brownian_weights(3, 60);
        let direct: f64 = xs.iter().enumerate().map(|(i, x)| x * x / ((i + 1) as f64).powi(2)).sum();
        assert!((f.norm_l2().unwrap().powi(2) - direct).abs() < 1e-12 * direct);
        let quad = gauss_legendre(200).integrate(|x| f.sample(x).re.powi(2));
        assert!((quad - direct).abs() < 1e-6 * direct);
    }

    #[test]
    fn legendre_coefficients_of_exponential() {
        let lambda = 7.0;
        let alpha = exponential_legendre_coefficients(lambda, 30).unwrap();
        let rule = gauss_legendre(80);
        for (n, a) in alpha.iter().enumerate().take(12) {
            let re = rule.integrate(|x| (lambda * x).cos() * crate::special::legendre_normalized(n, x));
            let im = rule.integrate(|x| (lambda * x).sin() * crate::special::legendre_normalized(n, x));
            assert!((a - Complex64::new(re, im)).norm() < 1e-12);
        }
        let total: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
        assert!((total - 2.0).abs() < 1e-12);
        let e0 = exponential_legendre_error(lambda, 0).unwrap();
        assert!((e0 - 2f64.sqrt()).abs() < 1e-12);
        let e5 = exponential_legendre_error(lambda, 5).unwrap();
        let partial: f64 = alpha[..5].iter().map(|a| a.norm_sqr()).sum();
        assert!((e5 * e5 - (2.0 - partial)).abs() < 1e-12);
    }

    #[test]
    fn names_parse() {
        let f = parse_member("weierstrass:s=1.4:periodic").unwrap();
        assert!(f.fourier().is_some());
        assert!(parse_member("weierstrass:s=2").unwrap().fourier().is_none());
        assert!(parse_member("brownian:s=1:seed=4:kmax=10").unwrap().fourier().unwrap().cutoff() == 10);
        let e = parse_member("exponential:lambda=3").unwrap();
        assert!((e.sample(0.5) - Complex64::from_polar(1.0, 1.5)).norm() < 1e-15);
        assert_eq!(parse_member("monomial:j=3").unwrap().sample(0.5).re, 0.125);
        for bad in ["", "weierstrass", "weierstrass:s=x", "monomial:j=1:periodic", "cosine:s=1", "brownian:s=1:q=2"] {
            assert!(parse_member(bad).is_err(), "{bad}");
        }
    }
}
