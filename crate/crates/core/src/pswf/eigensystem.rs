//! The Legendre-coefficient eigensystem of the prolate operator, split by parity
//! into two symmetric tridiagonal matrices.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// One parity block: row `i` couples the Legendre indices `k = parity + 2i`
/// and `k + 2`.
#[derive(Debug, Clone)]
pub(crate) struct ParityBlock {
    pub parity: usize,
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl ParityBlock {
    pub fn new(c: f64, parity: usize, len: usize) -> Self {
        let c2 = c * c;
        let diag = (0..len)
            .map(|i| {
                let k = (parity + 2 * i) as f64;
                k * (k + 1.0) + c2 * (2.0 * k * (k + 1.0) - 1.0) / ((2.0 * k + 3.0) * (2.0 * k - 1.0))
            })
            .collect();
        let off = (0..len.saturating_sub(1))
            .map(|i| {
                let k = (parity + 2 * i) as f64;
                c2 * (k + 1.0) * (k + 2.0)
                    / ((2.0 * k + 3.0) * ((2.0 * k + 1.0) * (2.0 * k + 5.0)).sqrt())
            })
            .collect();
        ParityBlock { parity, diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    /// Lowest `count` eigenpairs in increasing order. Each eigenvector has unit
    /// norm, tails refined to relative accuracy, and an arbitrary sign.
    pub fn lowest(&self, count: usize, tolerance: f64) -> Result<Vec<(f64, Vec<f64>)>> {
        let m = self.len();
        if count > m {
            return Err(Error::InvalidInput(format!(
                "requested {count} eigenpairs from a block of size {m}"
            )));
        }
        let mut a = DMatrix::<f64>::zeros(m, m);
        for i in 0..m {
            a[(i, i)] = self.diag[i];
        }
        for (i, &e) in self.off.iter().enumerate() {
            a[(i, i + 1)] = e;
            a[(i + 1, i)] = e;
        }
        let eig = SymmetricEigen::try_new(a, tolerance, 100 * m.max(10)).ok_or_else(|| {
            Error::NoConvergence(format!(
                "symmetric eigensolver, parity {} block of size {m}",
                self.parity
            ))
        })?;
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let mut out = Vec::with_capacity(count);
        for &idx in order.iter().take(count) {
            let mut v: Vec<f64> = eig.eigenvectors.column(idx).iter().copied().collect();
            normalize(&mut v);
            let chi = self.rayleigh(&v);
            self.refine_tails(chi, &mut v);
            normalize(&mut v);
            out.push((chi, v));
        }
        Ok(out)
    }

    fn rayleigh(&self, v: &[f64]) -> f64 {
        let mut num = 0.0;
        for i in 0..v.len() {
            num += self.diag[i] * v[i] * v[i];
        }
        for (i, &e) in self.off.iter().enumerate() {
            num += 2.0 * e * v[i] * v[i + 1];
        }
        num / v.iter().map(|x| x * x).sum::<f64>()
    }

    /// Replaces the decaying ends of `v` by values generated from the
    /// minimal-solution ratios of the three-term recurrence, so that
    /// components far below the largest one keep relative accuracy.
    pub fn refine_tails(&self, chi: f64, v: &mut [f64]) {
        let m = v.len();
        if m < 3 {
            return;
        }
        let (d, e) = (&self.diag, &self.off);

        // top[i] = v_i / v_{i-1}
        let mut top = vec![f64::INFINITY; m];
        top[m - 1] = -e[m - 2] / (d[m - 1] - chi);
        for i in (1..m - 1).rev() {
            top[i] = -e[i - 1] / ((d[i] - chi) + e[i] * top[i + 1]);
        }
        let mut i_top = m;
        while i_top > 1 && top[i_top - 1].is_finite() && top[i_top - 1].abs() < 1.0 {
            i_top -= 1;
        }

        // bottom[i] = v_i / v_{i+1}
        let mut bottom = vec![f64::INFINITY; m];
        bottom[0] = -e[0] / (d[0] - chi);
        for i in 1..m - 1 {
            bottom[i] = -e[i] / ((d[i] - chi) + e[i - 1] * bottom[i - 1]);
        }
        let mut i_bottom = 0;
        while i_bottom < m - 1 && bottom[i_bottom].is_finite() && bottom[i_bottom].abs() < 1.0 {
            i_bottom += 1;
        }

        // anchors v[i_top - 1] and v[i_bottom] must not lie inside the other tail
        if i_top < m && i_top >= 1 && i_bottom < i_top {
            for i in i_top..m {
                v[i] = v[i - 1] * top[i];
            }
        }
        if i_bottom > 0 && i_bottom < i_top {
            for i in (0..i_bottom).rev() {
                v[i] = bottom[i] * v[i + 1];
            }
        }
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}
