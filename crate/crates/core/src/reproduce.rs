//! Numerical experiments on the corpus: exponential, lacunary and random
//! cosine series expanded in prolate bases.
//!
//! Rows are labelled by the highest order kept: row `N` uses the partial sum
//! `Σ_{n=0}^{N} a_n ψ_n`, i.e. `N + 1` terms.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bounds::plateau_index;
use crate::corpus::{brownian, exponential, exponential_legendre_error, weierstrass, DEFAULT_K_CUT};
use crate::error::{domain, Result};
use crate::pswf::PswfBasis;
use crate::spectral::{
    bound_theorem5, coefficients, grid_error, grid_errors, psi_sup_norms, truncated_sum, NEGLIGIBLE_LAMBDA,
};

/// Smoothness columns of the lacunary-series table.
pub const TABLE1_S: [f64; 6] = [0.75, 1.0, 1.25, 1.5, 1.75, 2.0];
/// Rows of the lacunary-series table.
pub const TABLE1_N: [usize; 9] = [20, 30, 40, 50, 60, 70, 80, 90, 100];

/// Basis for bandwidth `c` whose last eigenvalue is below [`NEGLIGIBLE_LAMBDA`]
/// and which holds at least `n_max` functions.
pub fn basis_with_negligible_tail(c: f64, n_max: usize) -> Result<PswfBasis> {
    let mut top = n_max.max(plateau_index(c) + 20);
    loop {
        let b = PswfBasis::new(c, top)?;
        if b.lambda(top)? <= NEGLIGIBLE_LAMBDA {
            return Ok(b);
        }
        top += 20;
    }
}

/// Truncation errors for `e^{iλx}` in the Legendre basis and in the prolate
/// basis with `c = λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example1 {
    pub lambda: f64,
    pub n: usize,
    /// `‖f − Σ_{k<=N} α_k P̄_k‖₂`.
    pub legendre_error: f64,
    /// `(Σ_{k>N} |μ_k|² ψ_k(1)²)^{1/2}`.
    pub pswf_error: f64,
}

pub fn example1(lambda: f64, n: usize) -> Result<Example1> {
    if !(lambda > 0.0) {
        return Err(domain("example1", format!("λ must be > 0, got {lambda}")));
    }
    let basis = basis_with_negligible_tail(lambda, n + 40)?;
    let f = exponential(lambda)?;
    let a = coefficients(&f, &basis, basis.n_max() + 1)?;
    let tail: f64 = a[n + 1..].iter().map(|v| v.norm_sqr()).sum();
    Ok(Example1 {
        lambda,
        n,
        legendre_error: exponential_legendre_error(lambda, n + 1)?,
        pswf_error: tail.sqrt(),
    })
}

/// Grid errors `E_n(s)` of the non-periodic lacunary series, `cells[i][j]`
/// for `ns[i]` and `ss[j]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1 {
    pub c: f64,
    pub ns: Vec<usize>,
    pub ss: Vec<f64>,
    pub cells: Vec<Vec<f64>>,
}

pub fn table1(c: f64, ns: &[usize], ss: &[f64]) -> Result<Table1> {
    let top = ns.iter().copied().max().unwrap_or(0);
    let basis = PswfBasis::new(c, top)?;
    let terms: Vec<usize> = ns.iter().map(|n| n + 1).collect();
    let mut columns = Vec::with_capacity(ss.len());
    for &s in ss {
        let f = weierstrass(s, false, DEFAULT_K_CUT)?;
        let a = coefficients(&f, &basis, top + 1)?;
        columns.push(grid_errors(&f, &a, &basis, &terms)?);
    }
    let cells = (0..ns.len()).map(|i| columns.iter().map(|col| col[i]).collect()).collect();
    Ok(Table1 {
        c,
        ns: ns.to_vec(),
        ss: ss.to_vec(),
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example3Row {
    pub n: usize,
    pub actual: f64,
    pub bound: f64,
    pub lambda: f64,
}

/// Actual grid error against the periodic-Sobolev bound for the periodic
/// lacunary series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example3 {
    pub c: f64,
    pub s: f64,
    pub norm_l2: f64,
    /// `‖f − f_{[c/π]}‖_{H^1}`, which enters the bound.
    pub h1_tail: f64,
    /// The same tail in `H^s`, for reference.
    pub hs_tail: f64,
    pub rows: Vec<Example3Row>,
}

/// The bound is taken with Sobolev exponent 1, for which the series is
/// periodic-`H¹` for every `s > 1`.
pub fn example3(c: f64, s: f64, ns: &[usize]) -> Result<Example3> {
    let top = ns.iter().copied().max().unwrap_or(0);
    let basis = basis_with_negligible_tail(c, top + 1)?;
    let f = weierstrass(s, true, DEFAULT_K_CUT)?;
    let data = f.fourier().expect("periodic series carries Fourier data");
    let from = (c / PI).floor() as u64 + 1;
    let h1_tail = data.sobolev_tail_norm(1.0, from);
    let hs_tail = data.sobolev_tail_norm(s, from);
    let norm_l2 = f.norm_l2().expect("periodic series carries its norm");
    let a = coefficients(&f, &basis, top + 1)?;
    let terms: Vec<usize> = ns.iter().map(|n| n + 1).collect();
    let actual = grid_errors(&f, &a, &basis, &terms)?;
    let sup = psi_sup_norms(&basis);
    let rows = ns
        .iter()
        .zip(actual)
        .map(|(&n, actual)| {
            Ok(Example3Row {
                n,
                actual,
                bound: bound_theorem5(&basis, n + 1, 1.0, norm_l2, h1_tail, &sup)?,
                lambda: basis.lambda(n)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Example3 {
        c,
        s,
        norm_l2,
        h1_tail,
        hs_tail,
        rows,
    })
}

/// Samples of the random cosine series and of its truncated expansion at
/// `points` equispaced nodes of `[-1, 1]`; `grid_error` always uses the
/// 101-point grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Example4 {
    pub c: f64,
    pub n: usize,
    pub s: f64,
    pub seed: u64,
    pub x: Vec<f64>,
    pub value: Vec<f64>,
    pub approx: Vec<f64>,
    pub grid_error: f64,
}

pub fn example4(c: f64, n: usize, s: f64, seed: u64, k_max: u32, points: usize) -> Result<Example4> {
    if points < 2 {
        return Err(domain("example4", format!("need at least 2 sample points, got {points}")));
    }
    let basis = PswfBasis::new(c, n)?;
    let f = brownian(s, seed, k_max)?;
    let a = coefficients(&f, &basis, n + 1)?;
    let step = 2.0 / (points - 1) as f64;
    let x: Vec<f64> = (0..points).map(|i| -1.0 + step * i as f64).collect();
    let value: Vec<f64> = x.iter().map(|&t| f.sample(t).re).collect();
    let approx = x
        .iter()
        .map(|&t| truncated_sum(&a, &basis, n + 1, t).map(|v| v.re))
        .collect::<Result<Vec<_>>>()?;
    let grid_error = grid_error(|t| f.sample(t), |t| truncated_sum(&a, &basis, n + 1, t).unwrap_or_default());
    Ok(Example4 {
        c,
        n,
        s,
        seed,
        x,
        value,
        approx,
        grid_error,
    })
}
