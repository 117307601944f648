//! Gauss–Legendre quadrature and a small adaptive integrator built on it.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Gauss–Legendre rule on [-1, 1]. Nodes are in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Iterator over `(node, weight)` pairs.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `∫_{-1}^{1} f`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.points().map(|(x, w)| w * f(x)).sum()
    }

    /// `∫_a^b f` with the rule mapped affinely onto `[a, b]`.
    pub fn integrate_on<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self.points().map(|(x, w)| w * f(mid + half * x)).sum::<f64>()
    }
}

/// Gauss–Legendre nodes and weights of the given order (`order >= 1`).
///
/// Nodes are the roots of `P_order`, found by Newton iteration on the
/// three-term recurrence from the usual cosine initial guesses; weights are
/// `2 / ((1 - x²) P'_order(x)²)`.
pub fn gauss_legendre(order: usize) -> QuadratureRule {
    assert!(order >= 1, "quadrature order must be >= 1");
    let n = order;
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // i-th largest root
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_and_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule {
        order,
        nodes,
        weights,
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}

fn rule_pair() -> &'static (QuadratureRule, QuadratureRule) {
    static RULES: OnceLock<(QuadratureRule, QuadratureRule)> = OnceLock::new();
    RULES.get_or_init(|| (gauss_legendre(12), gauss_legendre(24)))
}

/// Adaptive integration of a smooth integrand on `[a, b]` to absolute tolerance `tol`.
///
/// Each panel compares 12- and 24-point Gauss–Legendre estimates and is bisected
/// until they agree.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (lo, hi) = rule_pair();
        let coarse = lo.integrate_on(a, b, f);
        let fine = hi.integrate_on(a, b, f);
        if (fine - coarse).abs() <= tol || depth >= 40 {
            return fine;
        }
        let mid = 0.5 * (a + b);
        panel(f, a, mid, 0.5 * tol, depth + 1) + panel(f, mid, b, 0.5 * tol, depth + 1)
    }
    if a == b {
        return 0.0;
    }
    panel(f, a, b, tol, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let r = gauss_legendre(1);
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - 2.0).abs() < 1e-15);
        let r = gauss_legendre(2);
        let t = 1.0 / 3f64.sqrt();
        assert!((r.nodes()[0] + t).abs() < 1e-15 && (r.nodes()[1] - t).abs() < 1e-15);
        assert!((r.weights()[0] - 1.0).abs() < 1e-15 && (r.weights()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn order_16_integrates_x30() {
        let r = gauss_legendre(16);
        let v = r.integrate(|x| x.powi(30));
        assert!((v - 2.0 / 31.0).abs() <= 1e-12);
    }

    #[test]
    fn weights_sum_to_two_and_nodes_sorted() {
        for order in [3, 10, 64, 200, 1024] {
            let r = gauss_legendre(order);
            let s: f64 = r.weights().iter().sum();
            assert!((s - 2.0).abs() < 1e-12, "order {order}: {s}");
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(r.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn adaptive_integrates_smooth_functions() {
        let v = integrate_adaptive(&|t: f64| t.cos(), 0.0, 1.3, 1e-13);
        assert!((v - 1.3f64.sin()).abs() < 1e-13);
        let v = integrate_adaptive(&|t: f64| (-t * t).exp(), -4.0, 4.0, 1e-13);
        assert!((v - 1.772_453_850_905_516 * 0.999_999_984_582_742).abs() < 1e-12);
    }
}
