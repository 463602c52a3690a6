use ndarray::Array2;
use crate::error::Result;
use crate::instance::GraphInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind { DoublyStochastic, Perturbed, General }

#[derive(Debug, Clone)]
pub struct PartitionMatrix { q: Array2<f64>, kind: MatrixKind }

#[derive(Debug, Clone)]
pub struct FwConfig { pub max_iters: usize, pub rel_tol: f64, pub line_search_tol: f64 }

pub fn frank_wolfe(_inst: &GraphInstance, _cfg: &FwConfig) -> Result<PartitionMatrix> { unimplemented!() }
