//! Expansions `f = Σ a_n ψ_n` in a prolate basis: coefficients by quadrature or
//! closed form, truncated sums, the 101-point grid error, and the a-priori
//! error bounds for Sobolev and almost band-limited functions.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::pswf::PswfBasis;
use crate::special::{clenshaw_normalized, gauss_legendre, integrate_adaptive, QuadratureRule};
use crate::sup::grid_sup;

/// Points of the grid error metric: `x_k = k/50`, `k = −50, …, 50`.
pub const GRID_POINTS: usize = 101;

/// Grid size for the sup norms `‖ψ_n‖_∞`.
pub const PSI_SUP_GRID: usize = 800;

/// `λ_{n_max}` must be below this before a tail sum over `n >= N` is trusted.
pub const NEGLIGIBLE_LAMBDA: f64 = 1e-18;

pub type Sampler = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Coefficients `b_k = 2^{-1/2} ∫ f(x) e^{−iπkx} dx` of a 2-periodic function,
/// so that `f = Σ_k b_k e^{iπkx}/√2`. Stored sparsely, sorted by `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierData {
    terms: Vec<(i64, Complex64)>,
}

impl FourierData {
    /// Sorts by frequency and merges repeated frequencies.
    pub fn new(mut terms: Vec<(i64, Complex64)>) -> Result<Self> {
        if terms.iter().any(|(_, b)| !(b.re.is_finite() && b.im.is_finite())) {
            return Err(Error::InvalidInput("Fourier coefficients must be finite".into()));
        }
        terms.sort_by_key(|t| t.0);
        let mut merged: Vec<(i64, Complex64)> = Vec::with_capacity(terms.len());
        for (k, b) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == k => last.1 += b,
                _ => merged.push((k, b)),
            }
        }
        Ok(FourierData { terms: merged })
    }

    /// Real cosine series `Σ_k c_k cos(kπx)` for `k >= 1`, which has
    /// `b_{±k} = c_k/√2`.
    pub fn cosine_series(terms: impl IntoIterator<Item = (u64, f64)>) -> Result<Self> {
        let mut out = Vec::new();
        for (k, a) in terms {
            if k == 0 {
                out.push((0, Complex64::new(2f64.sqrt() * a, 0.0)));
            } else {
                let k = i64::try_from(k).map_err(|_| Error::InvalidInput(format!("frequency {k} too large")))?;
                let b = Complex64::new(a * FRAC_1_SQRT_2, 0.0);
                out.push((k, b));
                out.push((-k, b));
            }
        }
        Self::new(out)
    }

    pub fn terms(&self) -> &[(i64, Complex64)] {
        &self.terms
    }

    pub fn coefficient(&self, k: i64) -> Complex64 {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1,
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    /// Largest `|k|` carried.
    pub fn cutoff(&self) -> u64 {
        self.terms.iter().map(|t| t.0.unsigned_abs()).max().unwrap_or(0)
    }

    /// `b_{−k} = conj(b_k)` to rounding.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|&(k, b)| {
            let d = self.coefficient(-k) - b.conj();
            d.norm() <= 1e-14 * b.norm().max(1e-300)
        })
    }

    pub fn sample(&self, x: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(k, b)| b * Complex64::from_polar(FRAC_1_SQRT_2, PI * k as f64 * x))
            .sum()
    }

    /// `‖f‖₂ = (Σ|b_k|²)^{1/2}`.
    pub fn norm_l2(&self) -> f64 {
        self.terms.iter().map(|t| t.1.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖f‖_{H^s} = (Σ (1 + (kπ)²)^s |b_k|²)^{1/2}`.
    pub fn sobolev_norm(&self, s: f64) -> f64 {
        self.sobolev_tail_norm(s, 0)
    }

    /// The same norm restricted to `|k| >= from`, i.e. of `f − f_{[from − 1]}`.
    pub fn sobolev_tail_norm(&self, s: f64, from: u64) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.0.unsigned_abs() >= from)
            .map(|&(k, b)| (1.0 + (PI * k as f64).powi(2)).powf(s) * b.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// How a function is known, which decides the coefficient route.
#[derive(Debug, Clone, PartialEq)]
pub enum Form {
    /// Only point values.
    Samples,
    /// `f(x) = Σ_j w_j e^{iω_j x}` with pairs `(ω_j, w_j)`.
    Exponentials(Vec<(f64, Complex64)>),
    /// A 2-periodic function given by its Fourier coefficients.
    Fourier(FourierData),
    /// `f(x) = x^j`.
    Monomial(u32),
}

/// A function on `[-1, 1]` with whatever closed-form data and norms are known.
#[derive(Clone)]
pub struct FunctionSpec {
    name: String,
    sampler: Sampler,
    form: Form,
    norm_l2: Option<f64>,
    smoothness: Option<f64>,
}

impl fmt::Debug for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionSpec")
            .field("name", &self.name)
            .field("form", &self.form)
            .field("norm_l2", &self.norm_l2)
            .field("smoothness", &self.smoothness)
            .finish_non_exhaustive()
    }
}

impl FunctionSpec {
    pub fn from_sampler(
        name: impl Into<String>,
        f: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        FunctionSpec {
            name: name.into(),
            sampler: Arc::new(f),
            form: Form::Samples,
            norm_l2: None,
            smoothness: None,
        }
    }

    pub fn from_real_sampler(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self::from_sampler(name, move |x| Complex64::new(f(x), 0.0))
    }

    pub fn from_exponentials(name: impl Into<String>, terms: Vec<(f64, Complex64)>) -> Result<Self> {
        if terms.iter().any(|(w, a)| !w.is_finite() || !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidInput("exponential terms must be finite".into()));
        }
        let shared = terms.clone();
        let sampler = move |x: f64| -> Complex64 {
            shared.iter().map(|&(w, a)| a * Complex64::from_polar(1.0, w * x)).sum()
        };
        Ok(FunctionSpec {
            name: name.into(),
            sampler: Arc::new(sampler),
            form: Form::Exponentials(terms),
            norm_l2: None,
            smoothness: None,
        })
    }

    pub fn from_fourier(name: impl Into<String>, data: FourierData) -> Self {
        let norm = data.norm_l2();
        let shared = data.clone();
        FunctionSpec {
            name: name.into(),
            sampler: Arc::new(move |x| shared.sample(x)),
            form: Form::Fourier(data),
            norm_l2: Some(norm),
            smoothness: None,
        }
    }

    /// `x^j`, with `‖x^j‖₂ = (2/(2j+1))^{1/2}`.
    pub fn monomial(j: u32) -> Self {
        FunctionSpec {
            name: format!("monomial:j={j}"),
            sampler: Arc::new(move |x: f64| Complex64::new(x.powi(j as i32), 0.0)),
            form: Form::Monomial(j),
            norm_l2: Some((2.0 / (2 * j + 1) as f64).sqrt()),
            smoothness: Some(f64::INFINITY),
        }
    }

    pub fn with_norm_l2(mut self, norm: f64) -> Self {
        self.norm_l2 = Some(norm);
        self
    }

    /// Replaces the point evaluator, keeping the closed-form data; the two
    /// must describe the same function.
    pub fn with_sampler(mut self, f: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        self.sampler = Arc::new(f);
        self
    }

    /// Sobolev exponent `s` the function is expanded against.
    pub fn with_smoothness(mut self, s: f64) -> Self {
        self.smoothness = Some(s);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sample(&self, x: f64) -> Complex64 {
        (self.sampler)(x)
    }

    pub fn sampler(&self) -> Sampler {
        Arc::clone(&self.sampler)
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn fourier(&self) -> Option<&FourierData> {
        match &self.form {
            Form::Fourier(d) => Some(d),
            _ => None,
        }
    }

    pub fn norm_l2(&self) -> Option<f64> {
        self.norm_l2
    }

    pub fn smoothness(&self) -> Option<f64> {
        self.smoothness
    }
}

/// `max(128, 2(count + c))`.
pub fn default_quadrature_order(count: usize, c: f64) -> usize {
    128usize.max(2 * (count + c.ceil() as usize))
}

/// `a_n = Σ_l w_l f(x_l) ψ_n(x_l)` for `n < count`.
pub fn coeffs_quadrature(
    f: &FunctionSpec,
    basis: &PswfBasis,
    count: usize,
    rule: &QuadratureRule,
) -> Result<Vec<Complex64>> {
    let needed = 64usize.max(count + basis.c().ceil() as usize);
    if rule.order() < needed {
        return Err(Error::InvalidInput(format!(
            "quadrature order {} below the required {needed}",
            rule.order()
        )));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    basis.check_index(count - 1)?;
    let weighted: Vec<(f64, Complex64)> = rule.points().map(|(x, w)| (x, w * f.sample(x))).collect();
    Ok((0..count)
        .into_par_iter()
        .map(|n| {
            let beta = &basis.beta[n];
            weighted
                .iter()
                .map(|&(x, wf)| wf * clenshaw_normalized(beta, x))
                .sum()
        })
        .collect())
}

/// `a_n(e^{iλ·}) = μ_n ψ_n(λ/c)`; for `c = 0` these are the Legendre coefficients.
pub fn coeff_exponential(lambda: f64, basis: &PswfBasis, n: usize) -> Result<Complex64> {
    basis.check_index(n)?;
    let c = basis.c();
    if c > 0.0 && lambda.abs() <= c {
        Ok(basis.mu(n)? * basis.eval_inside(n, lambda / c)?)
    } else {
        basis.fourier_transform(n, lambda)
    }
}

/// Coefficients `a_n`, `n < count`, of `Σ_j w_j e^{iω_j x}`.
pub fn coeffs_exponentials(terms: &[(f64, Complex64)], basis: &PswfBasis, count: usize) -> Result<Vec<Complex64>> {
    let parts = terms
        .par_iter()
        .map(|&(w, a)| {
            basis
                .fourier_transform_all(w, count)
                .map(|t| t.into_iter().map(|v| a * v).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![Complex64::new(0.0, 0.0); count];
    for part in parts {
        for (o, v) in out.iter_mut().zip(part) {
            *o += v;
        }
    }
    Ok(out)
}

/// `a_n(x^j) = (−i)^j c^{−j} μ_n ψ_n^{(j)}(0)`.
pub fn coeff_monomial(j: u32, basis: &PswfBasis, n: usize) -> Result<Complex64> {
    basis.check_index(n)?;
    let c = basis.c();
    if !(c > 0.0) {
        return Err(Error::Unsupported("monomial coefficients by derivatives need c > 0".into()));
    }
    if (j as usize + n) % 2 == 1 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let turn = match j % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let d = basis.derivative_at_zero(n, j as usize)?;
    let scaled = d * (-(j as f64) * c.ln()).exp();
    Ok(turn * basis.mu(n)? * scaled)
}

/// `a_n^K = (μ_n/√2) Σ_{|k| <= K_f} b_k ψ_n(kπ/c)` for `n < count`.
pub fn coeffs_fourier(data: &FourierData, basis: &PswfBasis, count: usize) -> Result<Vec<Complex64>> {
    let terms: Vec<(f64, Complex64)> = data
        .terms()
        .iter()
        .map(|&(k, b)| (PI * k as f64, b * FRAC_1_SQRT_2))
        .collect();
    coeffs_exponentials(&terms, basis, count)
}

/// Coefficients for `n < count` by the most accurate route the form allows.
pub fn coefficients(f: &FunctionSpec, basis: &PswfBasis, count: usize) -> Result<Vec<Complex64>> {
    match f.form() {
        Form::Exponentials(terms) => coeffs_exponentials(terms, basis, count),
        Form::Fourier(data) => coeffs_fourier(data, basis, count),
        Form::Monomial(j) if basis.c() > 0.0 => (0..count).map(|n| coeff_monomial(*j, basis, n)).collect(),
        _ => {
            let rule = gauss_legendre(default_quadrature_order(count, basis.c()));
            coeffs_quadrature(f, basis, count, &rule)
        }
    }
}

/// `S_N f(x) = Σ_{n<N} a_n ψ_n(x)`.
pub fn truncated_sum(coeffs: &[Complex64], basis: &PswfBasis, n_terms: usize, x: f64) -> Result<Complex64> {
    if n_terms > coeffs.len() {
        return Err(Error::InvalidInput(format!(
            "N = {n_terms} exceeds the {} coefficients supplied",
            coeffs.len()
        )));
    }
    if !(x.abs() <= 1.0) {
        return Err(domain("truncated_sum", format!("|x| must be <= 1, got {x}")));
    }
    if n_terms > 0 {
        basis.check_index(n_terms - 1)?;
    }
    Ok((0..n_terms)
        .map(|n| coeffs[n] * clenshaw_normalized(&basis.beta[n], x))
        .sum())
}

/// `x_k = k/50` for `k = −50, …, 50`.
pub fn grid() -> Vec<f64> {
    (-50..=50).map(|k| k as f64 / 50.0).collect()
}

/// `[(1/50) Σ_{k=−50}^{50} |f(k/50) − g(k/50)|²]^{1/2}`.
pub fn grid_error(f: impl Fn(f64) -> Complex64, approx: impl Fn(f64) -> Complex64) -> f64 {
    (grid().into_iter().map(|x| (f(x) - approx(x)).norm_sqr()).sum::<f64>() / 50.0).sqrt()
}

/// Grid errors of `S_N f` for every `N` in `n_values`, sharing one table of
/// `ψ_n` on the grid.
pub fn grid_errors(
    f: &FunctionSpec,
    coeffs: &[Complex64],
    basis: &PswfBasis,
    n_values: &[usize],
) -> Result<Vec<f64>> {
    let top = n_values.iter().copied().max().unwrap_or(0);
    if top > coeffs.len() {
        return Err(Error::InvalidInput(format!(
            "N = {top} exceeds the {} coefficients supplied",
            coeffs.len()
        )));
    }
    if top > 0 {
        basis.check_index(top - 1)?;
    }
    let xs = grid();
    let psi: Vec<Vec<f64>> = (0..top)
        .into_par_iter()
        .map(|n| xs.iter().map(|&x| clenshaw_normalized(&basis.beta[n], x)).collect())
        .collect();
    let target: Vec<Complex64> = xs.iter().map(|&x| f.sample(x)).collect();
    Ok(n_values
        .iter()
        .map(|&m| {
            let sq: f64 = (0..xs.len())
                .map(|i| {
                    let s: Complex64 = (0..m).map(|n| coeffs[n] * psi[n][i]).sum();
                    (target[i] - s).norm_sqr()
                })
                .sum();
            (sq / 50.0).sqrt()
        })
        .collect())
}

/// `‖ψ_n‖_∞` on `[-1, 1]` for `n <= n_max`, from an 800-point grid on `[0, 1]` by parity.
pub fn psi_sup_norms(basis: &PswfBasis) -> Vec<f64> {
    (0..=basis.n_max())
        .into_par_iter()
        .map(|n| grid_sup(|x| clenshaw_normalized(&basis.beta[n], x), 0.0, 1.0, PSI_SUP_GRID).value)
        .collect()
}

/// `K (1+c²)^{−s/2} ‖f‖_{H^s} + K √λ_N ‖f‖₂`. `K = 1` is valid for functions
/// vanishing with their derivatives at `±1`.
pub fn bound_theorem4(
    basis: &PswfBasis,
    n_terms: usize,
    s: f64,
    norm_l2: f64,
    norm_hs: f64,
    k_const: f64,
) -> Result<f64> {
    let c = basis.c();
    let lambda = basis.lambda(n_terms)?;
    Ok(k_const * (1.0 + c * c).powf(-s / 2.0) * norm_hs + k_const * lambda.sqrt() * norm_l2)
}

/// `√((1/2 + π/(4c)) Σ_{n=N}^{n_max} ‖ψ_n‖_∞² λ_n) ‖f‖₂ + c^{−s} ‖f − f_{[c/π]}‖_{H^s}`
/// for a periodic `f`.
pub fn bound_theorem5(
    basis: &PswfBasis,
    n_terms: usize,
    s: f64,
    norm_l2: f64,
    norm_hs_tail: f64,
    supnorms: &[f64],
) -> Result<f64> {
    let c = basis.c();
    if !(c > 0.0) {
        return Err(Error::Unsupported("the periodic bound needs c > 0".into()));
    }
    let n_max = basis.n_max();
    if supnorms.len() <= n_max {
        return Err(Error::InvalidInput(format!(
            "{} sup norms supplied, {} required",
            supnorms.len(),
            n_max + 1
        )));
    }
    let lambda = basis.lambda_all()?;
    if lambda[n_max] > NEGLIGIBLE_LAMBDA {
        return Err(Error::TailNotNegligible {
            n_max,
            lambda: lambda[n_max],
        });
    }
    let tail: f64 = (n_terms..=n_max).map(|n| supnorms[n].powi(2) * lambda[n]).sum();
    Ok(((0.5 + PI / (4.0 * c)) * tail).sqrt() * norm_l2 + c.powf(-s) * norm_hs_tail)
}

/// `ε_T + ε_Ω + √λ_N`.
pub fn bound_prop6(eps_t: f64, eps_omega: f64, lambda_n: f64) -> Result<f64> {
    if !(eps_t >= 0.0 && eps_omega >= 0.0 && lambda_n >= 0.0) {
        return Err(domain("bound_prop6", "inputs must be non-negative"));
    }
    Ok(eps_t + eps_omega + lambda_n.sqrt())
}

/// `ε_Ω = ((1/2π) ∫_{|ξ|>c} |f̂(ξ)|² dξ)^{1/2}` for an even `|f̂|`, the
/// integral cut at `upper`.
pub fn band_concentration_defect(fhat: impl Fn(f64) -> f64, c: f64, upper: f64, tol: f64) -> f64 {
    let g = |xi: f64| fhat(xi).powi(2);
    (2.0 * integrate_adaptive(&g, c, upper, tol) / (2.0 * PI)).sqrt()
}

/// `M_f = ((1/2π) ∫ |f̂(ξ)|² |ξ|^{2s} dξ)^{1/2}` for an even `|f̂|`, cut at `upper`.
pub fn transform_seminorm(fhat: impl Fn(f64) -> f64, s: f64, upper: f64, tol: f64) -> f64 {
    let g = |xi: f64| fhat(xi).powi(2) * xi.powf(2.0 * s);
    (2.0 * integrate_adaptive(&g, 0.0, upper, tol) / (2.0 * PI)).sqrt()
}

/// Coefficients, grid error and whichever bounds the metadata of `f` supports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub name: String,
    pub c_used: f64,
    pub n_used: usize,
    pub coefficients: Vec<Complex64>,
    pub grid_error: f64,
    pub bound_t4: Option<f64>,
    pub bound_t5: Option<f64>,
    pub bound_p6: Option<f64>,
}

/// Optional inputs to [`ExpansionReport::build`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    /// Extension constant `K` of the Sobolev bound.
    pub k_const: f64,
    /// `(ε_T, ε_Ω)` when known; the band-limited part then uses `√λ_N`.
    pub defects: Option<(f64, f64)>,
}

impl Default for BoundInputs {
    fn default() -> Self {
        BoundInputs {
            k_const: 1.0,
            defects: None,
        }
    }
}

impl ExpansionReport {
    /// Expands `f` with `N = n_terms` terms. The Sobolev bound needs a norm and
    /// smoothness; the periodic one also needs Fourier data and a negligible
    /// eigenvalue tail, and is left out otherwise.
    pub fn build(f: &FunctionSpec, basis: &PswfBasis, n_terms: usize, inputs: &BoundInputs) -> Result<Self> {
        let coefficients = coefficients(f, basis, n_terms)?;
        let grid_error = grid_errors(f, &coefficients, basis, &[n_terms])?[0];
        let c = basis.c();
        let lambda_n = if c > 0.0 && n_terms <= basis.n_max() {
            Some(basis.lambda(n_terms)?)
        } else {
            None
        };
        let mut bound_t4 = None;
        let mut bound_t5 = None;
        if let (Some(data), Some(s), Some(_)) = (f.fourier(), f.smoothness(), lambda_n) {
            let l2 = data.norm_l2();
            bound_t4 = Some(bound_theorem4(basis, n_terms, s, l2, data.sobolev_norm(s), inputs.k_const)?);
            let tail = data.sobolev_tail_norm(s, (c / PI).floor() as u64 + 1);
            match bound_theorem5(basis, n_terms, s, l2, tail, &psi_sup_norms(basis)) {
                Ok(b) => bound_t5 = Some(b),
                Err(Error::TailNotNegligible { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let bound_p6 = match (inputs.defects, lambda_n) {
            (Some((t, w)), Some(l)) => Some(bound_prop6(t, w, l)?),
            _ => None,
        };
        Ok(ExpansionReport {
            name: f.name().to_string(),
            c_used: c,
            n_used: n_terms,
            coefficients,
            grid_error,
            bound_t4,
            bound_t5,
            bound_p6,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn quadrature_recovers_a_basis_function() {
        let b = PswfBasis::new(10.0, 12).unwrap();
        let beta = b.beta(3).unwrap().to_vec();
        let f = FunctionSpec::from_real_sampler("psi3", move |x| clenshaw_normalized(&beta, x));
        let rule = gauss_legendre(128);
        let a = coeffs_quadrature(&f, &b, 13, &rule).unwrap();
        for (n, v) in a.iter().enumerate() {
            let expected = if n == 3 { 1.0 } else { 0.0 };
            assert!((v - real(expected)).norm() < 1e-8, "n={n} {v}");
        }
        for &x in &[-1.0, -0.4, 0.3, 1.0] {
            let s = truncated_sum(&a, &b, 5, x).unwrap();
            assert!((s.re - b.eval_inside(3, x).unwrap()).abs() < 1e-8);
        }
        assert_eq!(truncated_sum(&a, &b, 0, 0.2).unwrap(), real(0.0));
    }

    #[test]
    fn quadrature_of_legendre_polynomial_gives_beta() {
        let b = PswfBasis::new(6.0, 10).unwrap();
        let j = 4;
        let f = FunctionSpec::from_real_sampler("P4", move |x| crate::special::legendre_normalized(j, x));
        let a = coeffs_quadrature(&f, &b, 11, &gauss_legendre(128)).unwrap();
        for (n, v) in a.iter().enumerate() {
            assert!((v.re - b.beta(n).unwrap()[j]).abs() < 1e-8);
            assert!(v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_short_rule() {
        let b = PswfBasis::new(10.0, 5).unwrap();
        let f = FunctionSpec::monomial(1);
        assert!(coeffs_quadrature(&f, &b, 5, &gauss_legendre(32)).is_err());
    }

    #[test]
    fn exponential_route_matches_quadrature() {
        let b = PswfBasis::new(10.0, 20).unwrap();
        for lambda in [5.0, 0.0, -7.5, 10.0, 23.0] {
            let f = FunctionSpec::from_exponentials("e", vec![(lambda, real(1.0))]).unwrap();
            let quad = coeffs_quadrature(&f, &b, 21, &gauss_legendre(200)).unwrap();
            let closed = coefficients(&f, &b, 21).unwrap();
            for n in 0..=20 {
                let single = coeff_exponential(lambda, &b, n).unwrap();
                assert!((quad[n] - single).norm() < 1e-8, "λ={lambda} n={n}");
                assert!((closed[n] - single).norm() < 1e-12);
                if lambda == 0.0 && n % 2 == 1 {
                    assert!(single.norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn exponential_at_bandwidth_is_mu_times_edge_value() {
        let b = PswfBasis::new(10.0, 8).unwrap();
        for n in 0..=8 {
            let a = coeff_exponential(10.0, &b, n).unwrap();
            let expected = b.mu(n).unwrap() * b.value_at_one(n).unwrap();
            assert!((a - expected).norm() < 1e-14);
        }
    }

    #[test]
    fn monomial_route_matches_quadrature() {
        let b = PswfBasis::new(10.0, 8).unwrap();
        let rule = gauss_legendre(128);
        for j in [0u32, 1, 2, 3] {
            let quad = coeffs_quadrature(&FunctionSpec::monomial(j), &b, 9, &rule).unwrap();
            for n in 0..=8 {
                let a = coeff_monomial(j, &b, n).unwrap();
                let tol = if j == 0 { 1e-8 } else { 1e-7 };
                assert!((a - quad[n]).norm() < tol, "j={j} n={n} {a} {}", quad[n]);
                if (j as usize + n) % 2 == 1 {
                    assert_eq!(a, real(0.0));
                }
            }
        }
        let legendre = PswfBasis::new(0.0, 3).unwrap();
        assert!(coeff_monomial(0, &legendre, 0).is_err());
    }

    #[test]
    fn fourier_route_is_linear() {
        let b = PswfBasis::new(10.0, 15).unwrap();
        let data = FourierData::cosine_series([(1u64, 1.0)]).unwrap();
        let a = coeffs_fourier(&data, &b, 16).unwrap();
        for n in 0..16 {
            let avg = (coeff_exponential(PI, &b, n).unwrap() + coeff_exponential(-PI, &b, n).unwrap()) / 2.0;
            assert!((a[n] - avg).norm() < 1e-12);
        }
        let zero = FourierData::new(vec![(3, real(0.0)), (-3, real(0.0))]).unwrap();
        assert!(coeffs_fourier(&zero, &b, 16).unwrap().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn fourier_data_norms_and_sampling() {
        let data = FourierData::cosine_series([(1u64, 0.5), (4, -0.25)]).unwrap();
        assert!(data.is_real());
        assert_eq!(data.cutoff(), 4);
        // ∫cos²(kπx) = 1 on [-1, 1]
        assert!((data.norm_l2().powi(2) - (0.25 + 0.0625)).abs() < 1e-15);
        let x = 0.3f64;
        let direct = 0.5 * (PI * x).cos() - 0.25 * (4.0 * PI * x).cos();
        assert!((data.sample(x) - real(direct)).norm() < 1e-15);
        let h1 = (1.0 + PI * PI) * 0.25 + (1.0 + 16.0 * PI * PI) * 0.0625;
        assert!((data.sobolev_norm(1.0).powi(2) - h1).abs() < 1e-12);
        assert!((data.sobolev_tail_norm(1.0, 2).powi(2) - (1.0 + 16.0 * PI * PI) * 0.0625).abs() < 1e-12);
        let merged = FourierData::new(vec![(2, real(1.0)), (2, real(1.0))]).unwrap();
        assert_eq!(merged.coefficient(2), real(2.0));
        assert_eq!(merged.coefficient(5), real(0.0));
    }

    #[test]
    fn grid_error_metric() {
        assert_eq!(grid_error(|x| real(x.sin()), |x| real(x.sin())), 0.0);
        let d = 0.125;
        let e = grid_error(real, |x| real(x + d));
        assert!((e - d * (101.0f64 / 50.0).sqrt()).abs() < 1e-15);
        assert_eq!(grid().len(), GRID_POINTS);
    }

    #[test]
    fn grid_errors_agree_with_pointwise_sums() {
        let b = PswfBasis::new(10.0, 20).unwrap();
        let f = FunctionSpec::from_exponentials("e", vec![(4.0, real(1.0))]).unwrap();
        let a = coefficients(&f, &b, 21).unwrap();
        let errs = grid_errors(&f, &a, &b, &[0, 5, 21]).unwrap();
        let direct = grid_error(|x| f.sample(x), |x| truncated_sum(&a, &b, 5, x).unwrap());
        assert!((errs[1] - direct).abs() < 1e-14);
        assert!((errs[0] - (101.0f64 / 50.0).sqrt()).abs() < 1e-12);
        assert!(errs[2] < 1e-10);
    }

    #[test]
    fn bounds_reduce_as_documented() {
        let b = PswfBasis::new(10.0, 60).unwrap();
        let l = b.lambda(5).unwrap();
        let t4 = bound_theorem4(&b, 5, 0.0, 2.0, 3.0, 1.0).unwrap();
        assert!((t4 - (3.0 + l.sqrt() * 2.0)).abs() < 1e-14);
        let tail = bound_theorem4(&b, 60, 1.0, 2.0, 3.0, 1.0).unwrap();
        assert!((tail - 3.0 / 101f64.sqrt()).abs() < 1e-12);
        assert!((bound_prop6(0.01, 0.02, 1e-6).unwrap() - 0.031).abs() < 1e-15);
        assert!(bound_prop6(-1.0, 0.0, 0.0).is_err());
        assert_eq!(bound_prop6(0.0, 0.0, 0.25).unwrap(), 0.5);
    }

    #[test]
    fn periodic_bound_requires_negligible_tail() {
        let b = PswfBasis::new(10.0, 12).unwrap();
        let sup = psi_sup_norms(&b);
        assert!(matches!(
            bound_theorem5(&b, 5, 1.0, 1.0, 0.0, &sup),
            Err(Error::TailNotNegligible { .. })
        ));
        let b = PswfBasis::new(10.0, 60).unwrap();
        let sup = psi_sup_norms(&b);
        // a trigonometric polynomial of degree below c/π has no second term
        let v = bound_theorem5(&b, 60, 1.0, 1.0, 0.0, &sup).unwrap();
        let expected = ((0.5 + PI / 40.0) * sup[60].powi(2) * b.lambda(60).unwrap()).sqrt();
        assert!((v - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn sup_norms_start_at_edge_values() {
        let b = PswfBasis::new(5.0, 10).unwrap();
        let sup = psi_sup_norms(&b);
        for n in 0..=10 {
            assert!(sup[n] >= b.value_at_one(n).unwrap() - 1e-14);
        }
    }

    #[test]
    fn band_defect_of_a_bump_obeys_the_sobolev_estimate() {
        // f = (1 − x²) on [-1, 1]: f̂(ξ) = 4 (sin ξ − ξ cos ξ)/ξ³, ‖f'‖₂² = 8/3
        let fhat = |xi: f64| {
            if xi.abs() < 1e-3 {
                4.0 / 3.0 - 2.0 * xi * xi / 15.0
            } else {
                4.0 * (xi.sin() - xi * xi.cos()) / xi.powi(3)
            }
        };
        let m = transform_seminorm(fhat, 1.0, 4000.0, 1e-12);
        assert!((m * m - 8.0 / 3.0).abs() < 1e-3, "M² = {}", m * m);
        for c in [5.0, 20.0] {
            let eps = band_concentration_defect(fhat, c, 4000.0, 1e-14);
            assert!(eps > 0.0 && eps <= m / c);
        }
    }

    #[test]
    fn report_serializes() {
        let b = PswfBasis::new(10.0, 60).unwrap();
        let data = FourierData::cosine_series([(1u64, 1.0), (2, 0.5)]).unwrap();
        let f = FunctionSpec::from_fourier("trig", data).with_smoothness(1.0);
        let r = ExpansionReport::build(&f, &b, 20, &BoundInputs::default()).unwrap();
        assert!(r.grid_error >= 0.0 && r.bound_t4.is_some() && r.bound_t5.is_some());
        assert!(r.grid_error <= r.bound_t5.unwrap() * (101.0f64 / 50.0).sqrt() + 1e-12);
        let back: ExpansionReport = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
