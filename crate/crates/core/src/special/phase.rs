//! The elliptic phase `S_q(x) = ∫_x^1 sqrt((1 - q t²)/(1 - t²)) dt`.

use crate::error::{domain, Result};
use crate::special::quadrature::integrate_adaptive;

const TOL: f64 = 1e-13;

/// `S_q` and its inverse for a fixed `q ∈ [0, 1)`.
///
/// Evaluated after the substitution `t = cos θ`, which turns the endpoint
/// singularity into the smooth integrand `sqrt(1 - q cos² θ)` on `[0, arccos x]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseIntegral {
    q: f64,
}

impl PhaseIntegral {
    pub fn new(q: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&q) {
            return Err(domain("PhaseIntegral", format!("q must lie in [0, 1), got {q}")));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    fn integrand(&self, theta: f64) -> f64 {
        let c = theta.cos();
        (1.0 - self.q * c * c).sqrt()
    }

    /// `∫_0^θ sqrt(1 - q cos² t) dt`, i.e. `S_q(cos θ)`.
    fn of_angle(&self, theta: f64) -> f64 {
        if self.q == 0.0 {
            return theta;
        }
        integrate_adaptive(&|t| self.integrand(t), 0.0, theta, TOL)
    }

    /// `S_q(x)` for `x ∈ [0, 1]`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(domain("phase_S", format!("x must lie in [0, 1], got {x}")));
        }
        Ok(self.of_angle(x.acos()))
    }

    /// `S_q(0)`, which lies in `[1, π/2]`.
    pub fn at_zero(&self) -> f64 {
        self.of_angle(std::f64::consts::FRAC_PI_2)
    }

    /// The `x ∈ [0, 1]` with `S_q(x) = s`, for `s ∈ [0, S_q(0)]`.
    pub fn inverse(&self, s: f64) -> Result<f64> {
        let top = self.at_zero();
        if !(0.0..=top * (1.0 + 1e-14)).contains(&s) {
            return Err(domain("phase_S inverse", format!("s must lie in [0, {top}], got {s}")));
        }
        // Newton in θ: d/dθ S(cos θ) = sqrt(1 - q cos² θ) >= sqrt(1 - q) > 0
        let mut theta = s.min(std::f64::consts::FRAC_PI_2);
        for _ in 0..60 {
            let f = self.of_angle(theta) - s;
            let step = f / self.integrand(theta);
            theta = (theta - step).clamp(0.0, std::f64::consts::FRAC_PI_2);
            if step.abs() < 1e-15 {
                break;
            }
        }
        Ok(theta.cos())
    }
}

/// `S_q(x)`.
pub fn phase_s(q: f64, x: f64) -> Result<f64> {
    PhaseIntegral::new(q)?.eval(x)
}
