//! Permutations, rank vectors and the distance between permutation matrices.
//!
//! A [`Permutation`] stores the 0-based map `i -> map[i]`. Its matrix form
//! puts the 1 of column `i` in row `map[i]`, so that `(P x)[map[i]] = x[i]`
//! and `(P^T B P)[i][j] = B[map[i]][map[j]]`.
//!
//! A [`RankVector`] stores 1-based ranks: `ranks[i] = j` iff `x[i]` is the
//! j-th smallest entry of `x`, ties broken by ascending index.

use ndarray::Array2;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A bijection of `{0..n-1}`; `map[i]` is the image of index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    /// Validates that `map` is a bijection of `{0..n-1}`.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range for n = {n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    /// Uniformly random permutation (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(rng);
        Self { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }

    /// Applies the permutation matrix to a vector: `out[map[i]] = x[i]`.
    pub fn apply<T: Copy + Default>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.map.len(), "length mismatch in Permutation::apply");
        let mut out = vec![T::default(); x.len()];
        for (i, &v) in self.map.iter().enumerate() {
            out[v] = x[i];
        }
        out
    }

    /// The 0/1 matrix with `P[map[i]][i] = 1`.
    pub fn to_matrix(&self) -> Array2<f64> {
        let n = self.map.len();
        let mut p = Array2::zeros((n, n));
        for (i, &v) in self.map.iter().enumerate() {
            p[[v, i]] = 1.0;
        }
        p
    }

    /// Frobenius distance `||P0 - P1||_F`; equals `sqrt(2 d)` where `d`
    /// counts indices on which the maps disagree.
    pub fn distance(&self, other: &Permutation) -> Result<f64> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
        }
        let disagreements = self
            .map
            .iter()
            .zip(&other.map)
            .filter(|(a, b)| a != b)
            .count();
        Ok((2.0 * disagreements as f64).sqrt())
    }
}

/// 1-based ranks of a real vector under the stable (ascending index) tie-break.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankVector {
    ranks: Vec<usize>,
}

impl RankVector {
    /// Ranks in `{1..n}`; `ranks[i] = j` iff `x[i]` is the j-th smallest.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn n(&self) -> usize {
        self.ranks.len()
    }
}

/// Ordering vector of `x`: entry `i` is the 1-based rank of `x[i]`,
/// ties broken by ascending index.
pub fn rank_vector(x: &[f64]) -> Result<RankVector> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("rank_vector input"));
    }
    let mut order: Vec<usize> = (0..x.len()).collect();
    // Stable sort on value keeps the ascending-index tie-break.
    order.sort_by(|&i, &j| x[i].partial_cmp(&x[j]).expect("finite entries"));
    let mut ranks = vec![0; x.len()];
    for (pos, &i) in order.iter().enumerate() {
        ranks[i] = pos + 1;
    }
    Ok(RankVector { ranks })
}
