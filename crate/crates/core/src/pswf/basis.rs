use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use super::eigensystem::ParityBlock;
use crate::error::{domain, Error, Result};
use crate::special::{
    bessel_j_half_all, clenshaw_normalized, legendre_normalized_all,
    legendre_normalized_deriv_order,
};

/// Controls for the Legendre-coefficient eigensystem.
#[derive(Debug, Clone, PartialEq)]
pub struct EigSystemOptions {
    /// Number of Legendre coefficients `K + 1`; `None` picks `n_max + 2c + 30`.
    pub matrix_dimension: Option<usize>,
    /// Convergence threshold handed to the symmetric eigensolver.
    pub eigen_tolerance: f64,
    /// Largest admissible `|β_K^n|` over all computed `n`.
    pub tail_tolerance: f64,
    /// The dimension is doubled on tail failure up to this cap.
    pub max_dimension: usize,
}

impl Default for EigSystemOptions {
    fn default() -> Self {
        EigSystemOptions {
            matrix_dimension: None,
            eigen_tolerance: f64::EPSILON,
            tail_tolerance: 1e-14,
            max_dimension: 4096,
        }
    }
}

impl EigSystemOptions {
    pub fn default_dimension(c: f64, n_max: usize) -> usize {
        n_max + (2.0 * c).ceil() as usize + 30
    }
}

/// Prolate spheroidal wave functions `ψ_0, …, ψ_{n_max}` for one bandwidth `c`.
///
/// `ψ_n = Σ_k β_k^n P̄_k` with unit L² norm on [-1, 1] and `ψ_n(1) > 0`.
/// `μ_n` is the eigenvalue of `f ↦ ∫ e^{icxy} f(y) dy` and `λ_n = c|μ_n|²/(2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PswfBasis {
    pub(crate) c: f64,
    pub(crate) n_max: usize,
    pub(crate) truncation: usize,
    pub(crate) chi: Vec<f64>,
    pub(crate) beta: Vec<Vec<f64>>,
    pub(crate) spectrum: Option<Spectrum>,
}

/// Eigenvalues of the finite Fourier and sinc-kernel operators.
///
/// `|μ_n|` underflows for large `n`, so its logarithm is kept alongside; the
/// phase is `i^{quarter_turns}`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Spectrum {
    pub mu: Vec<Complex64>,
    pub ln_abs_mu: Vec<f64>,
    pub lambda: Vec<f64>,
    pub ln_lambda: Vec<f64>,
}

impl PswfBasis {
    /// Solves the eigensystem for `ψ_0, …, ψ_{n_max}` with default options.
    pub fn new(c: f64, n_max: usize) -> Result<Self> {
        Self::build(c, n_max, &EigSystemOptions::default())
    }

    /// Solves the eigensystem, enlarging it until the Legendre tail is negligible,
    /// then computes `μ_n`, `λ_n` and checks the basis invariants.
    pub fn build(c: f64, n_max: usize, opts: &EigSystemOptions) -> Result<Self> {
        if !(c >= 0.0) || !c.is_finite() {
            return Err(domain("build_basis", format!("c must be finite and >= 0, got {c}")));
        }
        if !(opts.tail_tolerance > 0.0) || !(opts.eigen_tolerance > 0.0) {
            return Err(Error::InvalidInput("tolerances must be positive".into()));
        }
        let floor = EigSystemOptions::default_dimension(c, n_max);
        if c == 0.0 {
            return Ok(Self::legendre(n_max, opts.matrix_dimension.unwrap_or(floor).max(n_max + 1)));
        }
        let mut dim = opts.matrix_dimension.unwrap_or(floor).max(n_max + 3);
        loop {
            match Self::solve(c, n_max, dim, opts)? {
                Some(basis) => {
                    basis.check_invariants()?;
                    return Ok(basis);
                }
                None if dim >= opts.max_dimension => {
                    return Err(Error::TailTestFailed {
                        dimension: dim,
                        required: 2 * dim,
                    })
                }
                None => dim = (2 * dim).min(opts.max_dimension),
            }
        }
    }

    fn legendre(n_max: usize, dim: usize) -> Self {
        let chi = (0..=n_max).map(|n| (n * (n + 1)) as f64).collect();
        let beta = (0..=n_max)
            .map(|n| {
                let mut row = vec![0.0; dim];
                row[n] = 1.0;
                row
            })
            .collect();
        PswfBasis {
            c: 0.0,
            n_max,
            truncation: dim - 1,
            chi,
            beta,
            spectrum: None,
        }
    }

    /// `Ok(None)` when the tail test fails at this dimension.
    fn solve(c: f64, n_max: usize, dim: usize, opts: &EigSystemOptions) -> Result<Option<Self>> {
        let blocks = [
            ParityBlock::new(c, 0, dim.div_ceil(2)),
            ParityBlock::new(c, 1, dim / 2),
        ];
        let counts = [n_max / 2 + 1, n_max.div_ceil(2)];
        let mut pairs = Vec::with_capacity(2);
        for (block, &count) in blocks.iter().zip(&counts) {
            let p = block.lowest(count, opts.eigen_tolerance)?;
            if p.iter().any(|(_, v)| v.last().is_some_and(|t| t.abs() > opts.tail_tolerance)) {
                return Ok(None);
            }
            pairs.push(p);
        }
        let mut chi = Vec::with_capacity(n_max + 1);
        let mut beta = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let (value, v) = &pairs[n % 2][n / 2];
            let mut row = vec![0.0; dim];
            for (i, &b) in v.iter().enumerate() {
                row[n % 2 + 2 * i] = b;
            }
            if !positive_at_one(n, &row) {
                row.iter_mut().for_each(|b| *b = -*b);
            }
            chi.push(*value);
            beta.push(row);
        }
        let mut basis = PswfBasis {
            c,
            n_max,
            truncation: dim - 1,
            chi,
            beta,
            spectrum: None,
        };
        basis.spectrum = Some(basis.compute_spectrum()?);
        Ok(Some(basis))
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Highest Legendre index `K` kept in the expansions.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn chi(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.chi[n])
    }

    pub fn chi_all(&self) -> &[f64] {
        &self.chi
    }

    /// Legendre coefficients `β_0^n, …, β_K^n`.
    pub fn beta(&self, n: usize) -> Result<&[f64]> {
        self.check_index(n)?;
        Ok(&self.beta[n])
    }

    pub fn has_spectrum(&self) -> bool {
        self.spectrum.is_some()
    }

    fn spectrum(&self) -> Result<&Spectrum> {
        self.spectrum
            .as_ref()
            .ok_or_else(|| Error::Unsupported("μ_n and λ_n are not defined for c = 0".into()))
    }

    pub fn mu(&self, n: usize) -> Result<Complex64> {
        self.check_index(n)?;
        Ok(self.spectrum()?.mu[n])
    }

    /// `ln |μ_n|`, finite even where `|μ_n|` underflows.
    pub fn ln_abs_mu(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.spectrum()?.ln_abs_mu[n])
    }

    pub fn lambda(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.spectrum()?.lambda[n])
    }

    pub fn ln_lambda(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.spectrum()?.ln_lambda[n])
    }

    pub fn lambda_all(&self) -> Result<&[f64]> {
        Ok(&self.spectrum()?.lambda)
    }

    pub fn ln_lambda_all(&self) -> Result<&[f64]> {
        Ok(&self.spectrum()?.ln_lambda)
    }

    pub(crate) fn check_index(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::IndexOutOfRange {
                index: n,
                n_max: self.n_max,
            });
        }
        Ok(())
    }

    /// `ψ_n(x)` for `|x| <= 1` by Clenshaw summation of the Legendre series.
    pub fn eval_inside(&self, n: usize, x: f64) -> Result<f64> {
        self.check_index(n)?;
        if !(x.abs() <= 1.0) {
            return Err(domain("eval_inside", format!("|x| must be <= 1, got {x}")));
        }
        Ok(clenshaw_normalized(&self.beta[n], x))
    }

    /// `ψ_n(x)` on the whole real line.
    pub fn eval(&self, n: usize, x: f64) -> Result<f64> {
        if x.abs() <= 1.0 {
            self.eval_inside(n, x)
        } else {
            self.eval_outside(n, x)
        }
    }

    /// `ψ_n(1) = Σ_k β_k^n √(k + 1/2)`.
    pub fn value_at_one(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(sum_at_one(&self.beta[n]))
    }

    /// `∫_{-1}^{1} e^{iωy} ψ_n(y) dy = Σ_k i^k √(k+1/2) √(2π/ω) J_{k+1/2}(ω) β_k^n`.
    pub fn fourier_transform(&self, n: usize, omega: f64) -> Result<Complex64> {
        self.check_index(n)?;
        Ok(fourier_of_legendre_series(&self.beta[n], omega))
    }

    /// `∫ e^{iωy} ψ_n(y) dy` for `n < count`. Inside the band `|ω| <= c` this is
    /// `μ_n ψ_n(ω/c)`, which keeps relative accuracy where `|μ_n|` is tiny;
    /// outside, one Bessel table serves every `n`.
    pub fn fourier_transform_all(&self, omega: f64, count: usize) -> Result<Vec<Complex64>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        self.check_index(count - 1)?;
        if !omega.is_finite() {
            return Err(domain("fourier_transform_all", format!("ω must be finite, got {omega}")));
        }
        if self.c > 0.0 && omega.abs() <= self.c {
            let spec = self.spectrum()?;
            let x = omega / self.c;
            return Ok((0..count)
                .map(|n| spec.mu[n] * clenshaw_normalized(&self.beta[n], x))
                .collect());
        }
        let j = bessel_j_half_all(self.truncation, omega.abs());
        Ok((0..count)
            .map(|n| fourier_with_table(&self.beta[n], omega, &j))
            .collect())
    }

    /// Analytic extension `ψ_n(x) = μ_n^{-1} ∫ e^{icxy} ψ_n(y) dy` for `|x| > 1`.
    pub fn eval_outside(&self, n: usize, x: f64) -> Result<f64> {
        self.check_index(n)?;
        if !(x.abs() > 1.0) || !x.is_finite() {
            return Err(domain("eval_outside", format!("|x| must be > 1, got {x}")));
        }
        if self.c == 0.0 {
            return Err(Error::Unsupported("extension outside [-1, 1] needs c > 0".into()));
        }
        let spec = self.spectrum()?;
        let t = self.fourier_transform(n, self.c * x)?;
        // divide by |μ_n| i^n in log space; the quotient is real
        let rotated = t * quarter_turn(n).conj();
        Ok(rotated.re * (-spec.ln_abs_mu[n]).exp())
    }

    /// `ψ_n'(x)` for `|x| < 1` from the differentiated Legendre series.
    pub fn eval_derivative(&self, n: usize, x: f64) -> Result<f64> {
        self.check_index(n)?;
        if !(x.abs() < 1.0) {
            return Err(domain("eval_derivative", format!("|x| must be < 1, got {x}")));
        }
        let beta = &self.beta[n];
        let p = legendre_normalized_all(beta.len(), x);
        let mut sum = 0.0;
        for k in 1..beta.len() {
            if beta[k] == 0.0 {
                continue;
            }
            let (a, b) = ((k as f64 + 0.5).sqrt(), (k as f64 - 0.5).sqrt());
            // (1 - x²) P_k' = k (P_{k-1} - x P_k)
            let d = k as f64 * (p[k - 1] / b - x * p[k] / a) / (1.0 - x * x);
            sum += beta[k] * a * d;
        }
        Ok(sum)
    }

    /// Derivative of any order of `ψ_n` on the closed interval.
    pub fn eval_derivative_order(&self, n: usize, order: usize, x: f64) -> Result<f64> {
        self.check_index(n)?;
        if !(x.abs() <= 1.0) {
            return Err(domain("eval_derivative_order", format!("|x| must be <= 1, got {x}")));
        }
        if order == 0 {
            return self.eval_inside(n, x);
        }
        Ok(self.beta[n]
            .iter()
            .enumerate()
            .filter(|(_, b)| **b != 0.0)
            .map(|(k, b)| b * legendre_normalized_deriv_order(k, order, x))
            .sum())
    }

    /// `ψ_n^{(k)}(0)` from the recurrence obtained by differentiating the
    /// prolate equation `k` times at the origin:
    /// `ψ^{(k+2)}(0) = (k(k+1) − χ_n) ψ^{(k)}(0) + k(k−1) c² ψ^{(k−2)}(0)`.
    pub fn derivative_at_zero(&self, n: usize, k: usize) -> Result<f64> {
        self.check_index(n)?;
        if (k + n) % 2 == 1 {
            return Ok(0.0);
        }
        let chi = self.chi[n];
        let c2 = self.c * self.c;
        let (mut prev, mut cur, mut j) = if n % 2 == 0 {
            (0.0, self.eval_inside(n, 0.0)?, 0usize)
        } else {
            (0.0, self.eval_derivative(n, 0.0)?, 1usize)
        };
        while j < k {
            let jf = j as f64;
            let next = (jf * (jf + 1.0) - chi) * cur + jf * (jf - 1.0) * c2 * prev;
            prev = cur;
            cur = next;
            j += 2;
        }
        Ok(cur)
    }

    /// `μ_n` from the Bessel series of the extension formula evaluated at `x = 1`:
    /// `μ_n ψ_n(1) = √(2π/c) Σ_k i^k √(k+1/2) β_k^n J_{k+1/2}(c)`.
    ///
    /// Loses relative accuracy once `|μ_n|` falls below roughly `1e-14`; the
    /// stored `μ_n` comes from a ratio chain that does not.
    pub fn mu_direct(&self, n: usize) -> Result<Complex64> {
        self.check_index(n)?;
        if self.c == 0.0 {
            return Err(Error::Unsupported("μ_n is not defined for c = 0".into()));
        }
        let denom = self.value_at_one(n)?;
        if denom == 0.0 {
            return Err(Error::Invariant(format!("ψ_{n}(1) vanishes")));
        }
        Ok(self.fourier_transform(n, self.c)? / denom)
    }

    /// Largest relative deviation of the stored `μ_n` from `i^n |μ_n|` as
    /// measured by the direct formula, over `n` with `|μ_n| >= floor`.
    pub fn mu_phase_deviation(&self, floor: f64) -> Result<f64> {
        let spec = self.spectrum()?;
        let mut worst: f64 = 0.0;
        for n in 0..=self.n_max {
            if spec.mu[n].norm() < floor {
                continue;
            }
            let direct = self.mu_direct(n)?;
            let expected = quarter_turn(n) * direct.norm();
            worst = worst.max((direct - expected).norm() / direct.norm());
        }
        Ok(worst)
    }

    fn compute_spectrum(&self) -> Result<Spectrum> {
        let c = self.c;
        let psi0 = clenshaw_normalized(&self.beta[0], 0.0);
        if psi0 == 0.0 {
            return Err(Error::Invariant("ψ_0(0) vanishes".into()));
        }
        // ∫ψ_0 = μ_0 ψ_0(0), and ∫ψ_0 = √2 β_0^0
        let mu0 = SQRT_2 * self.beta[0][0] / psi0;
        let mut ln_abs = vec![mu0.abs().ln()];
        let mut turns = vec![if mu0 > 0.0 { 0u8 } else { 2 }];
        for k in 0..self.n_max {
            let (lo, hi) = (&self.beta[k], &self.beta[k + 1]);
            let i1 = moment_x(hi, lo);
            let i2 = derivative_pairing(hi, lo);
            if i1 == 0.0 || i2 == 0.0 || !i1.is_finite() || !i2.is_finite() {
                return Err(Error::NoConvergence(format!(
                    "μ ratio chain broke down between n = {k} and {}",
                    k + 1
                )));
            }
            // μ_{k+1} ∫ψ_{k+1}'ψ_k = i c μ_k ∫ y ψ_k ψ_{k+1}
            let r = c * i1 / i2;
            ln_abs.push(ln_abs[k] + r.abs().ln());
            turns.push((turns[k] + 1 + if r < 0.0 { 2 } else { 0 }) % 4);
        }
        let ln_c_over_2pi = (c / (2.0 * PI)).ln();
        let mu = ln_abs
            .iter()
            .zip(&turns)
            .map(|(&l, &t)| quarter_turn(t as usize) * l.exp())
            .collect();
        let ln_lambda: Vec<f64> = ln_abs.iter().map(|l| ln_c_over_2pi + 2.0 * l).collect();
        let lambda = ln_lambda.iter().map(|l| l.exp()).collect();
        Ok(Spectrum {
            mu,
            ln_abs_mu: ln_abs,
            lambda,
            ln_lambda,
        })
    }

    /// Whether the sign convention holds for `ψ_n`: `ψ_n(1) > 0` when that value is
    /// resolvable in floating point, otherwise the equivalent condition at the origin.
    pub fn sign_convention_holds(&self, n: usize) -> Result<bool> {
        self.check_index(n)?;
        let beta = &self.beta[n];
        let at_one = sum_at_one(beta);
        if at_one_resolvable(beta) {
            Ok(at_one > 0.0)
        } else {
            Ok(origin_sign_matches(n, beta))
        }
    }

    /// Checks the structural invariants of the basis.
    pub fn check_invariants(&self) -> Result<()> {
        let c2 = self.c * self.c;
        for n in 0..=self.n_max {
            let chi = self.chi[n];
            let nn = (n * (n + 1)) as f64;
            let slack = 1e-12 * (nn + c2).max(1.0);
            if chi < nn - slack || chi > nn + c2 + slack {
                return Err(Error::Invariant(format!(
                    "χ_{n} = {chi} outside [{nn}, {}]",
                    nn + c2
                )));
            }
            if n > 0 && !(chi > self.chi[n - 1]) {
                return Err(Error::Invariant(format!("χ not increasing at n = {n}")));
            }
            let beta = &self.beta[n];
            let norm: f64 = beta.iter().map(|b| b * b).sum();
            if (norm - 1.0).abs() > 1e-10 {
                return Err(Error::Invariant(format!("Σ_k (β_k^{n})² = {norm}")));
            }
            if beta.iter().skip(1 - n % 2).step_by(2).any(|&b| b != 0.0) {
                return Err(Error::Invariant(format!("ψ_{n} has mixed parity")));
            }
            if !self.sign_convention_holds(n)? {
                return Err(Error::Invariant(format!("sign convention fails for ψ_{n}")));
            }
        }
        if let Some(spec) = &self.spectrum {
            for n in 0..=self.n_max {
                let l = spec.lambda[n];
                if !(0.0..=1.0 + 1e-12).contains(&l) {
                    return Err(Error::Invariant(format!("λ_{n} = {l} outside (0, 1)")));
                }
                // λ_n near 1 agree to machine precision, so order is checked with slack
                if n > 0 && spec.ln_lambda[n] > spec.ln_lambda[n - 1] + 1e-12 {
                    return Err(Error::Invariant(format!("λ not decreasing at n = {n}")));
                }
                let expected = (self.c / (2.0 * PI)) * spec.mu[n].norm_sqr();
                if (expected - l).abs() > 1e-12 * l.max(f64::MIN_POSITIVE) && l > 1e-290 {
                    return Err(Error::Invariant(format!("λ_{n} != c|μ_n|²/2π")));
                }
            }
        }
        Ok(())
    }
}

fn quarter_turn(t: usize) -> Complex64 {
    match t % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn sum_at_one(beta: &[f64]) -> f64 {
    beta.iter()
        .enumerate()
        .map(|(k, b)| b * (k as f64 + 0.5).sqrt())
        .sum()
}

/// `ψ(1)` is trusted when it is not dominated by cancellation.
fn at_one_resolvable(beta: &[f64]) -> bool {
    let abs: f64 = beta
        .iter()
        .enumerate()
        .map(|(k, b)| b.abs() * (k as f64 + 0.5).sqrt())
        .sum();
    sum_at_one(beta).abs() > 1e-6 * abs
}

/// `ψ_n(1) > 0` is equivalent to `sign ψ_n(0) = (−1)^{n/2}` for even `n` and
/// `sign ψ_n'(0) = (−1)^{(n−1)/2}` for odd `n`; both hold at `c = 0` and the
/// values involved never vanish, so they persist for every `c`.
fn origin_sign_matches(n: usize, beta: &[f64]) -> bool {
    let expected = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let value = if n % 2 == 0 {
        clenshaw_normalized(beta, 0.0)
    } else {
        // P̄_k'(0) = √(k+1/2) k P_{k-1}(0) for odd k
        let p = legendre_normalized_all(beta.len(), 0.0);
        beta.iter()
            .enumerate()
            .skip(1)
            .step_by(2)
            .map(|(k, b)| b * (k as f64 + 0.5).sqrt() * k as f64 * p[k - 1] / (k as f64 - 0.5).sqrt())
            .sum()
    };
    value * expected > 0.0
}

fn positive_at_one(n: usize, beta: &[f64]) -> bool {
    if at_one_resolvable(beta) {
        sum_at_one(beta) > 0.0
    } else {
        origin_sign_matches(n, beta)
    }
}

/// `∫ y f g` for Legendre series `f = Σ a_j P̄_j`, `g = Σ b_j P̄_j`, using
/// `x P̄_j = s_{j+1} P̄_{j+1} + s_j P̄_{j-1}` with `s_j = j / √(4j² − 1)`.
fn moment_x(a: &[f64], b: &[f64]) -> f64 {
    let s = |j: usize| {
        let jf = j as f64;
        jf / (4.0 * jf * jf - 1.0).sqrt()
    };
    let len = a.len().min(b.len());
    let mut sum = 0.0;
    for j in 0..len {
        if a[j] == 0.0 {
            continue;
        }
        let mut inner = 0.0;
        if j + 1 < len {
            inner += s(j + 1) * b[j + 1];
        }
        if j >= 1 {
            inner += s(j) * b[j - 1];
        }
        sum += a[j] * inner;
    }
    sum
}

/// `∫ f' g` for Legendre series `f = Σ a_j P̄_j`, `g = Σ b_i P̄_i` of opposite
/// parity, from `∫ P̄_j' P̄_i = 2 √((j+1/2)(i+1/2))` for `i < j`, `i + j` odd.
fn derivative_pairing(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().min(b.len());
    let mut prefix = 0.0;
    let mut sum = 0.0;
    for j in 0..len {
        let w = (j as f64 + 0.5).sqrt();
        sum += a[j] * w * prefix;
        prefix += b[j] * w;
    }
    2.0 * sum
}

/// `∫_{-1}^{1} e^{iωy} Σ_k β_k P̄_k(y) dy`.
pub(crate) fn fourier_of_legendre_series(beta: &[f64], omega: f64) -> Complex64 {
    if omega == 0.0 {
        return Complex64::new(SQRT_2 * beta[0], 0.0);
    }
    let j = bessel_j_half_all(beta.len() - 1, omega.abs());
    fourier_with_table(beta, omega, &j)
}

/// Same as [`fourier_of_legendre_series`] with `j[k] = J_{k+1/2}(|ω|)` supplied.
fn fourier_with_table(beta: &[f64], omega: f64, j: &[f64]) -> Complex64 {
    if omega == 0.0 {
        return Complex64::new(SQRT_2 * beta[0], 0.0);
    }
    let scale = (2.0 * PI / omega.abs()).sqrt();
    // i^k for ω > 0, (−i)^k for ω < 0
    let mut acc = [0.0f64; 4];
    for (k, (&b, &jk)) in beta.iter().zip(j).enumerate() {
        if b != 0.0 {
            acc[k % 4] += b * (k as f64 + 0.5).sqrt() * jk;
        }
    }
    let re = acc[0] - acc[2];
    let im = acc[1] - acc[3];
    let im = if omega > 0.0 { im } else { -im };
    Complex64::new(re, im) * scale
}
