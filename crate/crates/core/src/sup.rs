//! Sup norms on an interval: a Chebyshev–Lobatto grid refined by golden-section
//! search around the largest grid values.

/// Location and value of an estimated maximum of `|f|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSup {
    pub value: f64,
    pub location: f64,
}

/// Number of grid maxima that are refined.
const REFINED: usize = 3;

/// `m >= 2` Chebyshev–Lobatto points on `[a, b]` in increasing order, endpoints included.
pub fn chebyshev_lobatto(m: usize, a: f64, b: f64) -> Vec<f64> {
    assert!(m >= 2, "need at least two grid points");
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    (0..m)
        .map(|i| {
            let t = std::f64::consts::PI * (m - 1 - i) as f64 / (m - 1) as f64;
            match i {
                0 => a,
                _ if i == m - 1 => b,
                _ => mid + half * t.cos(),
            }
        })
        .collect()
}

/// `sup_{[a,b]} |f|` estimated on `m` Chebyshev–Lobatto points, each of the three
/// largest grid values refined inside its neighbouring cells.
pub fn grid_sup<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, m: usize) -> GridSup {
    let xs = chebyshev_lobatto(m, a, b);
    let vals: Vec<f64> = xs.iter().map(|&x| f(x).abs()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
    let mut best = GridSup {
        value: vals[order[0]],
        location: xs[order[0]],
    };
    for &i in order.iter().take(REFINED) {
        let lo = xs[i.saturating_sub(1)];
        let hi = xs[(i + 1).min(m - 1)];
        let cand = golden_max(&f, lo, hi);
        if cand.value > best.value {
            best = cand;
        }
    }
    best
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> GridSup {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let mut f1 = f(x1).abs();
    let mut f2 = f(x2).abs();
    for _ in 0..60 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2).abs();
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1).abs();
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    if f1 > f2 {
        GridSup { value: f1, location: x1 }
    } else {
        GridSup { value: f2, location: x2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lobatto_grid_is_sorted_with_endpoints() {
        let g = chebyshev_lobatto(400, -1.0, 1.0);
        assert_eq!((g[0], g[399]), (-1.0, 1.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn refinement_finds_interior_peak() {
        // peak at an irrational point between grid nodes
        let p = 0.1 * std::f64::consts::E;
        let s = grid_sup(|x| (-40.0 * (x - p).powi(2)).exp(), -1.0, 1.0, 11);
        assert!((s.value - 1.0).abs() < 1e-12);
        assert!((s.location - p).abs() < 1e-6);
    }
}
