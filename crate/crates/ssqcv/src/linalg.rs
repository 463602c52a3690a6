//! Small dense helpers: Frobenius products, LU solves, spectral norm.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

pub fn frob_norm_sq(m: &Array2<f64>) -> f64 {
    m.iter().map(|v| v * v).sum()
}

pub fn frob_inner(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// LU factorization with partial pivoting, for solving a few right-hand
/// sides against the same square matrix.
pub struct LuFactors {
    lu: Array2<f64>,
    pivots: Vec<usize>,
}

pub fn lu_factor(a: &Array2<f64>) -> Result<LuFactors> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let n = rows;
    let mut lu = a.clone();
    let mut pivots = Vec::with_capacity(n);
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_val = lu[[k, k]].abs();
        for r in k + 1..n {
            let v = lu[[r, k]].abs();
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if !pivot_val.is_finite() || pivot_val <= 1e-13 * scale {
            return Err(Error::SingularMatrix);
        }
        if pivot_row != k {
            for c in 0..n {
                let tmp = lu[[k, c]];
                lu[[k, c]] = lu[[pivot_row, c]];
                lu[[pivot_row, c]] = tmp;
            }
        }
        pivots.push(pivot_row);
        for r in k + 1..n {
            let factor = lu[[r, k]] / lu[[k, k]];
            lu[[r, k]] = factor;
            for c in k + 1..n {
                lu[[r, c]] -= factor * lu[[k, c]];
            }
        }
    }
    Ok(LuFactors { lu, pivots })
}

impl LuFactors {
    pub fn solve(&self, rhs: &Array1<f64>) -> Array1<f64> {
        let n = self.pivots.len();
        assert_eq!(rhs.len(), n, "rhs length mismatch in LuFactors::solve");
        let mut x = rhs.clone();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        // Forward substitution with unit lower triangle.
        for k in 0..n {
            for c in 0..k {
                x[k] = x[k] - self.lu[[k, c]] * x[c];
            }
        }
        // Back substitution.
        for k in (0..n).rev() {
            for c in k + 1..n {
                x[k] = x[k] - self.lu[[k, c]] * x[c];
            }
            x[k] /= self.lu[[k, k]];
        }
        x
    }
}

/// Largest eigenvalue of `Q^T Q` (squared spectral norm of `Q`) by power
/// iteration with a Rayleigh-quotient stop.
pub fn spectral_norm_sq(q: &Array2<f64>) -> f64 {
    let n = q.nrows();
    if n == 0 {
        return 0.0;
    }
    let m = q.t().dot(q);
    // Fixed start with a ramp so it is not orthogonal to the top eigenvector
    // for structured matrices.
    let mut v = Array1::from_iter((0..n).map(|i| 1.0 + i as f64 / n as f64));
    let norm = v.dot(&v).sqrt();
    v.mapv_inplace(|x| x / norm);
    let mut lambda = 0.0f64;
    for _ in 0..2000 {
        let w = m.dot(&v);
        let next = v.dot(&w);
        let norm = w.dot(&w).sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        v = w / norm;
        if (next - lambda).abs() <= 1e-13 * next.abs().max(1e-300) {
            return next;
        }
        lambda = next;
    }
    lambda
}
