//! Gamma function helpers, mostly in log space.

use std::f64::consts::PI;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(x)` for `x > 0`.
///
/// Stirling series for `x >= 15`; smaller arguments are shifted up with the
/// recurrence `Γ(x + 1) = x Γ(x)`.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    let mut shift = 0.0;
    let mut z = x;
    while z < 15.0 {
        shift += z.ln();
        z += 1.0;
    }
    let z2 = z * z;
    // Bernoulli terms B_{2k} / (2k (2k-1) z^{2k-1})
    let series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2)
        - 1.0 / (1680.0 * z * z2 * z2 * z2)
        + 1.0 / (1188.0 * z * z2 * z2 * z2 * z2);
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series - shift
}

/// `ln n!`, exact summation for small `n`.
pub fn ln_factorial(n: u64) -> f64 {
    if n < 64 {
        (2..=n).map(|j| (j as f64).ln()).sum()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// `Γ(k + 3/2) = sqrt(π) (2k + 1)!! / 2^{k+1}`.
///
/// Evaluated as the exact product for `k <= 150` and through log space beyond
/// (where the result overflows for `k > 170`).
pub fn gamma_half_integer(k: usize) -> f64 {
    if k > 150 {
        return ln_gamma_half_integer(k).exp();
    }
    let mut g = PI.sqrt() / 2.0;
    for j in 1..=k {
        g *= j as f64 + 0.5;
    }
    g
}

/// `ln Γ(k + 3/2)`.
pub fn ln_gamma_half_integer(k: usize) -> f64 {
    if k <= 150 {
        return gamma_half_integer(k).ln();
    }
    ln_gamma(k as f64 + 1.5)
}
