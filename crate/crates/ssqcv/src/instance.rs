//! Graph matching instances and the objectives they are scored by.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A pair of n-by-n real matrices to be matched, `min_P ||A - P^T B P||_F`.
#[derive(Debug, Clone)]
pub struct GraphInstance {
    name: String,
    a: Array2<f64>,
    b: Array2<f64>,
}

impl GraphInstance {
    pub fn new(name: impl Into<String>, a: Array2<f64>, b: Array2<f64>) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
        }
        if b.nrows() != b.ncols() {
            return Err(Error::NotSquare { rows: b.nrows(), cols: b.ncols() });
        }
        if a.nrows() != b.nrows() {
            return Err(Error::DimensionMismatch { left: a.nrows(), right: b.nrows() });
        }
        if a.nrows() == 0 {
            return Err(Error::EmptyInput);
        }
        if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("instance matrices"));
        }
        Ok(Self { name: name.into(), a, b })
    }

    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn a(&self) -> &Array2<f64> {
        &self.a
    }

    pub fn b(&self) -> &Array2<f64> {
        &self.b
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Instance with `A` negated; converts QAP minimization data to the
    /// matching form under which `trace_objective` reports positive values.
    pub fn negate_a(mut self) -> Self {
        self.a.mapv_inplace(|v| -v);
        self
    }

    /// `||A - P^T B P||_F`, the norm itself (not its square).
    pub fn gm_objective(&self, p: &Permutation) -> Result<f64> {
        let n = self.n();
        if p.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: p.n() });
        }
        let map = p.map();
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let d = self.a[[i, j]] - self.b[[map[i], map[j]]];
                sum += d * d;
            }
        }
        Ok(sum.sqrt())
    }

    /// `tr[-A^T P^T B P]`, the positive-convention assignment value.
    pub fn trace_objective(&self, p: &Permutation) -> Result<f64> {
        let n = self.n();
        if p.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: p.n() });
        }
        let map = p.map();
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                sum += self.a[[i, j]] * self.b[[map[i], map[j]]];
            }
        }
        Ok(-sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::arr2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_instance(n: usize, rng: &mut ChaCha8Rng) -> GraphInstance {
        let a = Array2::from_shape_fn((n, n), |_| rng.random::<f64>() * 4.0 - 2.0);
        let b = Array2::from_shape_fn((n, n), |_| rng.random::<f64>() * 4.0 - 2.0);
        GraphInstance::new("random", a, b).unwrap()
    }

    #[test]
    fn identical_graphs_match_at_zero() {
        let a = arr2(&[[0.0, 1.0], [1.0, 0.0]]);
        let inst = GraphInstance::new("same", a.clone(), a).unwrap();
        assert_eq!(inst.gm_objective(&Permutation::identity(2)).unwrap(), 0.0);
    }

    #[test]
    fn zero_b_leaves_norm_of_a() {
        let a = arr2(&[[0.0, 1.0], [1.0, 0.0]]);
        let b = Array2::zeros((2, 2));
        let inst = GraphInstance::new("zb", a, b).unwrap();
        for map in [vec![0, 1], vec![1, 0]] {
            let p = Permutation::from_map(map).unwrap();
            assert!((inst.gm_objective(&p).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        }
    }

    // Independent oracle: build P as a matrix and evaluate with explicit
    // matrix products.
    fn gm_by_matrices(inst: &GraphInstance, p: &Permutation) -> f64 {
        let pm = p.to_matrix();
        let diff = inst.a() - &pm.t().dot(inst.b()).dot(&pm);
        crate::linalg::frob_norm_sq(&diff).sqrt()
    }

    fn trace_by_matrices(inst: &GraphInstance, p: &Permutation) -> f64 {
        let pm = p.to_matrix();
        let m = inst.a().t().dot(&pm.t()).dot(inst.b()).dot(&pm);
        -m.diag().sum()
    }

    #[test]
    fn objectives_match_matrix_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let inst = random_instance(6, &mut rng);
            let p = Permutation::random(6, &mut rng);
            let gm = inst.gm_objective(&p).unwrap();
            assert!((gm - gm_by_matrices(&inst, &p)).abs() < 1e-10);
            let tr = inst.trace_objective(&p).unwrap();
            assert!((tr - trace_by_matrices(&inst, &p)).abs() < 1e-10);
        }
    }

    #[test]
    fn trace_of_identity_pair() {
        let inst = GraphInstance::new("eye", Array2::eye(2), Array2::eye(2)).unwrap();
        assert_eq!(inst.trace_objective(&Permutation::identity(2)).unwrap(), -2.0);
    }

    #[test]
    fn norm_and_trace_satisfy_the_expansion_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in [3usize, 8, 20] {
            for _ in 0..10 {
                let inst = random_instance(n, &mut rng);
                let p = Permutation::random(n, &mut rng);
                let gm = inst.gm_objective(&p).unwrap();
                let tr = inst.trace_objective(&p).unwrap();
                let lhs = gm * gm;
                let rhs = crate::linalg::frob_norm_sq(inst.a())
                    + crate::linalg::frob_norm_sq(inst.b())
                    + 2.0 * tr;
                assert!(
                    (lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0),
                    "identity violated: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let inst = random_instance(4, &mut rng);
        assert!(inst.gm_objective(&Permutation::identity(5)).is_err());
        assert!(inst.trace_objective(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn constructor_validates_shapes_and_values() {
        let a = Array2::zeros((2, 3));
        assert!(GraphInstance::new("bad", a, Array2::zeros((3, 3))).is_err());
        assert!(GraphInstance::new("bad", Array2::zeros((2, 2)), Array2::zeros((3, 3))).is_err());
        let mut nan = Array2::zeros((2, 2));
        nan[[0, 0]] = f64::NAN;
        assert!(GraphInstance::new("bad", nan, Array2::zeros((2, 2))).is_err());
        assert!(GraphInstance::new("bad", Array2::zeros((0, 0)), Array2::zeros((0, 0))).is_err());
    }
}
