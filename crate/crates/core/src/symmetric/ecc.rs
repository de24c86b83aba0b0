use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use super::characters::{RowCache, MAX_CHARACTER_K};
use super::class_function::ClassFunction;
use super::partition::{partitions, Partition};
use crate::analytics::random::nonsmall_coefficient;
use crate::error::{Error, Result};
use crate::rng::trial_rng;

/// How often the minimising class of a random `r`-sparse class function has
/// more than `r` distinct part sizes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EccStats {
    pub k: usize,
    pub r: usize,
    pub trials: usize,
    pub outside: usize,
    pub fraction_outside: f64,
    pub max_distinct_parts: usize,
}

/// Minimising class of one random draw on stream `(seed, trial)`.
fn trial_minimizer(k: usize, r: usize, nontrivial: &[Partition], cache: &RowCache, seed: u64, trial: u64) -> Result<Partition> {
    let mut rng = trial_rng(seed, trial);
    let chosen: Vec<&Partition> = nontrivial.choose_multiple(&mut rng, r).collect();
    let coeffs: Vec<(Partition, f64)> = chosen.into_iter().map(|p| (p.clone(), nonsmall_coefficient(&mut rng))).collect();
    let f = ClassFunction::from_coefficients_cached(k, &coeffs, cache)?;
    Ok(f.argmin_class().clone())
}

pub fn ecc_experiment(k: usize, r: usize, trials: usize, seed: u64) -> Result<EccStats> {
    if !(2..=MAX_CHARACTER_K).contains(&k) {
        return Err(Error::TooLarge { what: "ECC group order k", size: k as f64, limit: MAX_CHARACTER_K as f64 });
    }
    let labels = partitions(k)?;
    let nontrivial = &labels[1..];
    if r == 0 || r > nontrivial.len() {
        return Err(Error::InvalidParameter(format!("sparsity {r} must lie in 1..={} for k = {k}", nontrivial.len())));
    }
    if trials == 0 {
        return Err(Error::ZeroSamples);
    }
    let cache = RowCache::new();
    let parts: Vec<usize> = (0..trials as u64)
        .into_par_iter()
        .map(|t| trial_minimizer(k, r, nontrivial, &cache, seed, t).map(|p| p.distinct_parts()))
        .collect::<Result<_>>()?;
    let outside = parts.iter().filter(|&&d| d > r).count();
    Ok(EccStats {
        k,
        r,
        trials,
        outside,
        fraction_outside: outside as f64 / trials as f64,
        max_distinct_parts: parts.iter().copied().max().unwrap_or(0),
    })
}

/// Fraction of partitions of `k` with at most `threshold` distinct part sizes.
pub fn distinct_parts_coverage(k: usize, threshold: usize) -> Result<f64> {
    let ps = partitions(k)?;
    Ok(ps.iter().filter(|p| p.distinct_parts() <= threshold).count() as f64 / ps.len() as f64)
}
