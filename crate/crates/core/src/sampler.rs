//! Measurement statistics of the linearised phase-oracle sampler.
//!
//! In the linearised regime a measurement returns the zero mode with
//! probability `p₀ = 1 − Σ_{k≠0} (2π/K)²|Ĥ(k)|²` and otherwise a non-zero
//! mode with probability proportional to `|Ĥ(k)|²`. Experiments draw from
//! per-trial ChaCha streams so results do not depend on thread scheduling.

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::{global_modes, linearisation_params, GlobalMode, LinearisationParams};
use crate::model::NetworkInstance;
use crate::rng::trial_rng;

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementDistribution {
    pub p_zero: f64,
    pub modes: Vec<GlobalMode>,
    /// Conditional law over `modes`, summing to one.
    pub conditional: Vec<f64>,
}

impl MeasurementDistribution {
    /// Unconditional probability of each non-zero mode.
    pub fn mode_probabilities(&self) -> Vec<f64> {
        self.conditional.iter().map(|p| p * (1.0 - self.p_zero)).collect()
    }

    fn conditional_sampler(&self) -> WeightedIndex<f64> {
        WeightedIndex::new(&self.conditional).expect("conditional weights are positive")
    }
}

pub fn measurement_distribution(instance: &NetworkInstance, params: &LinearisationParams) -> Result<MeasurementDistribution> {
    let modes = global_modes(instance)?;
    distribution_from_modes(modes, params)
}

pub fn distribution_from_modes(modes: Vec<GlobalMode>, params: &LinearisationParams) -> Result<MeasurementDistribution> {
    if modes.is_empty() {
        return Err(Error::NoModes);
    }
    let weights: Vec<f64> = modes.iter().map(GlobalMode::weight).collect();
    let total: f64 = weights.iter().sum();
    let phase = 2.0 * std::f64::consts::PI / params.k;
    // first-order model; clamped where the linearisation has broken down
    let p_zero = (1.0 - phase * phase * total).clamp(0.0, 1.0);
    let conditional = weights.iter().map(|w| w / total).collect();
    Ok(MeasurementDistribution { p_zero, modes, conditional })
}

/// Outcome counts of `total` measurements, keyed by `(edge, k_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementBatch {
    pub seed: u64,
    pub total: usize,
    pub zero_count: usize,
    pub counts: BTreeMap<(usize, usize), usize>,
}

impl MeasurementBatch {
    pub fn empty(seed: u64) -> Self {
        MeasurementBatch { seed, total: 0, zero_count: 0, counts: BTreeMap::new() }
    }

    pub fn distinct_modes(&self) -> usize {
        self.counts.len()
    }

    pub fn merge(&mut self, other: &MeasurementBatch) {
        self.total += other.total;
        self.zero_count += other.zero_count;
        for (&label, &c) in &other.counts {
            *self.counts.entry(label).or_insert(0) += c;
        }
    }
}

fn draw_batch<R: Rng>(dist: &MeasurementDistribution, samples: usize, conditional: bool, seed: u64, rng: &mut R) -> MeasurementBatch {
    let picker = dist.conditional_sampler();
    let mut batch = MeasurementBatch::empty(seed);
    batch.total = samples;
    for _ in 0..samples {
        if !conditional && rng.gen::<f64>() < dist.p_zero {
            batch.zero_count += 1;
            continue;
        }
        let m = &dist.modes[picker.sample(rng)];
        *batch.counts.entry((m.edge, m.k_i)).or_insert(0) += 1;
    }
    batch
}

/// `samples` raw measurements, zero-mode outcomes included.
pub fn sample_modes(instance: &NetworkInstance, samples: usize, seed: u64) -> Result<MeasurementBatch> {
    let params = linearisation_params(instance)?;
    let dist = measurement_distribution(instance, &params)?;
    sample_from(&dist, samples, seed, 0, false)
}

/// Draws from an explicit distribution on stream `(seed, stream)`.
pub fn sample_from(dist: &MeasurementDistribution, samples: usize, seed: u64, stream: u64, conditional: bool) -> Result<MeasurementBatch> {
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut rng = trial_rng(seed, stream);
    Ok(draw_batch(dist, samples, conditional, seed, &mut rng))
}

/// Per-`T` recovery statistics for `T = 1..=max_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceCurve {
    pub seed: u64,
    pub trials: usize,
    pub modes: usize,
    pub conditional: bool,
    pub mean_fraction: Vec<f64>,
    pub stddev: Vec<f64>,
    /// Draws each trial needed to see every mode, if it did within `max_t`.
    pub completion: Vec<Option<usize>>,
}

impl ConvergenceCurve {
    /// First `T` whose mean recovered fraction reaches `1 − 1/s`, i.e. at most
    /// one mode still missing on average.
    pub fn full_recovery_crossing(&self) -> Option<usize> {
        let target = 1.0 - 1.0 / self.modes as f64 - 1e-12;
        self.mean_fraction.iter().position(|&f| f >= target).map(|i| i + 1)
    }

    /// Mean draws to collect every mode over trials that finished.
    pub fn mean_completion(&self) -> Option<f64> {
        let done: Vec<usize> = self.completion.iter().flatten().copied().collect();
        (!done.is_empty()).then(|| done.iter().sum::<usize>() as f64 / done.len() as f64)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("T,mean_fraction,stddev\n");
        for (t, (m, s)) in self.mean_fraction.iter().zip(&self.stddev).enumerate() {
            out.push_str(&format!("{},{m:.6},{s:.6}\n", t + 1));
        }
        out
    }
}

pub fn convergence_experiment(
    instance: &NetworkInstance,
    max_t: usize,
    trials: usize,
    seed: u64,
    conditional: bool,
) -> Result<ConvergenceCurve> {
    if trials == 0 || max_t == 0 {
        return Err(Error::ZeroSamples);
    }
    let params = linearisation_params(instance)?;
    let dist = measurement_distribution(instance, &params)?;
    convergence_from(&dist, max_t, trials, seed, conditional)
}

pub fn convergence_from(
    dist: &MeasurementDistribution,
    max_t: usize,
    trials: usize,
    seed: u64,
    conditional: bool,
) -> Result<ConvergenceCurve> {
    if trials == 0 || max_t == 0 {
        return Err(Error::ZeroSamples);
    }
    let s = dist.modes.len();
    let picker = dist.conditional_sampler();
    let runs: Vec<(Vec<usize>, Option<usize>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let mut seen = vec![false; s];
            let mut distinct = 0;
            let mut done = None;
            let path = (1..=max_t)
                .map(|t| {
                    if conditional || rng.gen::<f64>() >= dist.p_zero {
                        let m = picker.sample(&mut rng);
                        if !seen[m] {
                            seen[m] = true;
                            distinct += 1;
                            if distinct == s {
                                done = Some(t);
                            }
                        }
                    }
                    distinct
                })
                .collect();
            (path, done)
        })
        .collect();
    let n = trials as f64;
    let mut mean_fraction = Vec::with_capacity(max_t);
    let mut stddev = Vec::with_capacity(max_t);
    for t in 0..max_t {
        let fr: Vec<f64> = runs.iter().map(|(p, _)| p[t] as f64 / s as f64).collect();
        let mean = fr.iter().sum::<f64>() / n;
        let var = fr.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / n;
        mean_fraction.push(mean);
        stddev.push(var.sqrt());
    }
    Ok(ConvergenceCurve {
        seed,
        trials,
        modes: s,
        conditional,
        mean_fraction,
        stddev,
        completion: runs.into_iter().map(|(_, d)| d).collect(),
    })
}

/// Conditional draws until every outcome of `weights` has appeared.
pub fn draws_to_collect_all<R: Rng>(weights: &WeightedIndex<f64>, outcomes: usize, rng: &mut R) -> usize {
    let mut seen = vec![false; outcomes];
    let mut distinct = 0;
    let mut draws = 0;
    while distinct < outcomes {
        let m = weights.sample(rng);
        draws += 1;
        if !seen[m] {
            seen[m] = true;
            distinct += 1;
        }
    }
    draws
}

/// `s·ln s`.
pub fn coupon_threshold(s: usize) -> f64 {
    if s <= 1 {
        0.0
    } else {
        s as f64 * (s as f64).ln()
    }
}

/// `H_s = Σ_{i=1}^s 1/i`.
pub fn harmonic_number(s: usize) -> f64 {
    (1..=s).map(|i| 1.0 / i as f64).sum()
}

/// Conditional draw budget `⌈s·ln(s/δ)⌉`.
pub fn coupon_budget(s: usize, delta: f64) -> usize {
    ((s as f64) * (s as f64 / delta).ln()).ceil().max(1.0) as usize
}
