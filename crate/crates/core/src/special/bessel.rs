//! Bessel functions of the first and second kind needed by the PSWF machinery:
//! `J0`, `J1`, `Y0`, `Y1` on the positive axis and half-integer orders
//! `J_{k+1/2}` through spherical Bessel recurrences.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{domain, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Above this argument the Hankel asymptotic expansion is used for integer orders.
const ASYMPTOTIC_FROM: f64 = 25.0;
const RESCALE_ABOVE: f64 = 1e250;

/// Values of the integer-order Bessel functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselValues {
    pub j0: f64,
    pub j1: f64,
    pub y0: f64,
    pub y1: f64,
}

/// `(J0(x), J1(x), Y0(x))` for `x > 0`.
pub fn bessel_j0j1y0(x: f64) -> Result<(f64, f64, f64)> {
    let v = bessel_integer(x)?;
    Ok((v.j0, v.j1, v.y0))
}

/// `J0`, `J1`, `Y0` and `Y1` at `x > 0`.
pub fn bessel_integer(x: f64) -> Result<BesselValues> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_integer", format!("Y0 needs x > 0, got {x}")));
    }
    if x > ASYMPTOTIC_FROM {
        let (j0, y0) = hankel(0, x);
        let (j1, y1) = hankel(1, x);
        return Ok(BesselValues { j0, j1, y0, y1 });
    }
    let j = miller_integer_orders(x);
    let log_term = (x / 2.0).ln() + EULER_GAMMA;
    // Neumann series for Y0 and its derivative
    let mut sum_y0 = 0.0;
    let mut sum_y1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum_y0 += sign * j[2 * k] / k as f64;
        sum_y1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
        k += 1;
    }
    let y0 = (2.0 / PI) * log_term * j[0] - (4.0 / PI) * sum_y0;
    let y1 = -(2.0 / (PI * x)) * j[0] + (2.0 / PI) * log_term * j[1] + (2.0 / PI) * sum_y1;
    Ok(BesselValues {
        j0: j[0],
        j1: j[1],
        y0,
        y1,
    })
}

/// `J0(x)` for any real `x`.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x == 0.0 {
        return 1.0;
    }
    if x > ASYMPTOTIC_FROM {
        return hankel(0, x).0;
    }
    miller_integer_orders(x)[0]
}

/// `J1(x)` for any real `x`.
pub fn bessel_j1(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let sign = x.signum();
    let x = x.abs();
    let v = if x > ASYMPTOTIC_FROM {
        hankel(1, x).0
    } else {
        miller_integer_orders(x)[1]
    };
    sign * v
}

/// Miller backward recurrence for `J_0 .. J_M`, normalized by
/// `1 = J_0 + 2 Σ_{k≥1} J_{2k}`.
fn miller_integer_orders(x: f64) -> Vec<f64> {
    let start = 2 * (((x + 20.0 + 2.0 * (40.0 * x).sqrt()) as usize) / 2 + 1);
    let mut j = vec![0.0; start + 2];
    j[start] = 1e-30;
    for k in (1..=start).rev() {
        j[k - 1] = (2.0 * k as f64 / x) * j[k] - j[k + 1];
        if j[k - 1].abs() > RESCALE_ABOVE {
            for v in j[k - 1..].iter_mut() {
                *v /= RESCALE_ABOVE;
            }
        }
    }
    let mut norm = j[0];
    let mut k = 2;
    while k < j.len() {
        norm += 2.0 * j[k];
        k += 2;
    }
    for v in j.iter_mut() {
        *v /= norm;
    }
    j
}

/// Hankel asymptotic expansion for `(J_ν(x), Y_ν(x))`, `ν ∈ {0, 1}`, large `x`.
fn hankel(nu: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (nu * nu) as f64;
    let mut p: f64 = 1.0;
    let mut q: f64 = 0.0;
    let mut term = 1.0f64;
    let mut prev_abs = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let a = term.abs();
        if a > prev_abs || a < 1e-17 * p.abs().max(1e-300) {
            break;
        }
        prev_abs = a;
        // P collects even k with sign (-1)^{k/2}; Q odd k with sign (-1)^{(k-1)/2}
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
    }
    let (s, c) = x.sin_cos();
    let (cos_chi, sin_chi) = if nu == 0 {
        ((c + s) * FRAC_1_SQRT_2, (s - c) * FRAC_1_SQRT_2)
    } else {
        ((s - c) * FRAC_1_SQRT_2, -(s + c) * FRAC_1_SQRT_2)
    };
    let amp = (2.0 / (PI * x)).sqrt();
    (
        amp * (p * cos_chi - q * sin_chi),
        amp * (p * sin_chi + q * cos_chi),
    )
}

/// `J_{k+1/2}(x)` for `x >= 0`.
pub fn bessel_j_half(k: usize, x: f64) -> f64 {
    bessel_j_half_all(k, x)[k]
}

/// `J_{1/2}(x), J_{3/2}(x), ..., J_{kmax+1/2}(x)` for `x >= 0`.
///
/// Uses upward recurrence of the spherical Bessel functions when `x > kmax`
/// (stable there) and Miller's downward recurrence seeded at
/// `kmax + 20 + x` otherwise, normalized against the closed forms of `j_0`/`j_1`.
pub fn bessel_j_half_all(kmax: usize, x: f64) -> Vec<f64> {
    let x = x.abs();
    if x == 0.0 {
        return vec![0.0; kmax + 1];
    }
    let j = spherical_bessel_all(kmax, x);
    let scale = (2.0 * x / PI).sqrt();
    j.into_iter().map(|v| v * scale).collect()
}

/// Spherical Bessel functions `j_0(x) .. j_kmax(x)`, `x > 0`.
pub fn spherical_bessel_all(kmax: usize, x: f64) -> Vec<f64> {
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = if x < 0.1 {
        let x2 = x * x;
        x / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0 * (1.0 - x2 / 54.0)))
    } else {
        (s / x - c) / x
    };
    let mut out = vec![0.0; kmax + 1];
    if x > kmax as f64 {
        out[0] = j0;
        if kmax >= 1 {
            out[1] = j1;
        }
        for k in 1..kmax {
            out[k + 1] = (2 * k + 1) as f64 / x * out[k] - out[k - 1];
        }
        return out;
    }
    let start = kmax + 20 + x.ceil() as usize;
    let mut work = vec![0.0; start + 2];
    work[start] = 1e-300;
    for k in (1..=start).rev() {
        work[k - 1] = (2 * k + 1) as f64 / x * work[k] - work[k + 1];
        if work[k - 1].abs() > RESCALE_ABOVE {
            for v in work[k - 1..].iter_mut() {
                *v /= RESCALE_ABOVE;
            }
        }
    }
    let factor = if j0.abs() >= j1.abs() {
        j0 / work[0]
    } else {
        j1 / work[1]
    };
    for k in 0..=kmax {
        out[k] = work[k] * factor;
    }
    out
}
