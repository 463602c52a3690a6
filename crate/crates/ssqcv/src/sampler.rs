use crate::error::Result;
use crate::instance::GraphInstance;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct SamplerConfig { pub seed: u64 }

#[derive(Debug, Clone)]
pub struct SolveResult { pub best_perm: Permutation }

pub fn solve(_inst: &GraphInstance, _cfg: &SamplerConfig) -> Result<SolveResult> { unimplemented!() }
