use rand::distributions::WeightedIndex;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::fourier::{global_modes, linearisation_params, p_min_of};
use crate::model::{topology, CostFunction, Graph, NetworkInstance};
use crate::rng::trial_rng;
use crate::sampler::{distribution_from_modes, draws_to_collect_all, harmonic_number};

use super::random::two_tier_pwl;

pub const VALIDATION_CYCLE: usize = 32;
pub const VALIDATION_TRIALS: usize = 100;
/// Harmonic weight law for the cosine rows.
pub const WEIGHT_RANGE: (f64, f64) = (0.9, 1.1);
/// Second-to-first harmonic amplitude law for the pwl row.
pub const PWL_RATIO_RANGE: (f64, f64) = (0.9, 1.0);
/// Stream offset for instance construction, clear of trial streams.
const BUILD_STREAM: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationRow {
    pub topology: String,
    pub cost: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub modes: usize,
    pub p_min: f64,
    /// `1/(n·m·r)`.
    pub bound: f64,
    pub ratio: f64,
    /// Mean conditional draws until every mode was seen.
    pub mean_measurements: f64,
    /// Expected draws for a uniform law over the same modes, `s·H_s`.
    pub uniform_expectation: f64,
    pub reference_measurements: f64,
}

struct Row {
    name: &'static str,
    graph: Graph,
    pwl: bool,
    reference: f64,
}

fn rows() -> Vec<Row> {
    vec![
        Row { name: "4x4 grid", graph: topology::grid(4, 4), pwl: false, reference: 37.0 },
        Row { name: "8-ring", graph: topology::ring(8), pwl: false, reference: 36.0 },
        Row { name: "K8", graph: topology::complete(8), pwl: false, reference: 41.0 },
        Row { name: "barbell 2xK5", graph: topology::barbell(5), pwl: false, reference: 44.0 },
        Row { name: "8-ring pwl", graph: topology::ring(8), pwl: true, reference: 50.0 },
    ]
}

fn build(row: &Row, seed: u64, index: u64) -> Result<NetworkInstance> {
    let mut rng = trial_rng(seed, BUILD_STREAM + index);
    let c = VALIDATION_CYCLE;
    let costs = (0..row.graph.edge_count())
        .map(|_| {
            if row.pwl {
                let ratio = rng.gen_range(PWL_RATIO_RANGE.0..=PWL_RATIO_RANGE.1);
                let shift = rng.gen_range(0.0..c as f64);
                two_tier_pwl(c, ratio, shift)
            } else {
                CostFunction::cosine(c, vec![rng.gen_range(WEIGHT_RANGE.0..=WEIGHT_RANGE.1)])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    NetworkInstance::cyclic(row.graph.clone(), costs)
}

/// The five benchmark topologies at `C = 32`, each with
/// [`VALIDATION_TRIALS`] collection trials.
pub fn validation_suite(seed: u64) -> Result<Vec<ValidationRow>> {
    rows()
        .iter()
        .enumerate()
        .map(|(idx, row)| {
            let inst = build(row, seed, idx as u64)?;
            let n = inst.node_count();
            let m = inst.edge_count();
            let r = if row.pwl { 4 } else { 2 };
            let modes = global_modes(&inst)?;
            let p_min = p_min_of(&modes, n)?;
            let dist = distribution_from_modes(modes, &linearisation_params(&inst)?)?;
            let s = dist.modes.len();
            let picker = WeightedIndex::new(&dist.conditional).expect("positive weights");
            let draws: Vec<usize> = (0..VALIDATION_TRIALS)
                .into_par_iter()
                .map(|t| draws_to_collect_all(&picker, s, &mut trial_rng(seed, t as u64)))
                .collect();
            let bound = 1.0 / (n * m * r) as f64;
            Ok(ValidationRow {
                topology: row.name.to_string(),
                cost: if row.pwl { "pwl r=4".into() } else { "cos r=2".into() },
                n,
                m,
                r,
                modes: s,
                p_min,
                bound,
                ratio: p_min / bound,
                mean_measurements: draws.iter().sum::<usize>() as f64 / draws.len() as f64,
                uniform_expectation: s as f64 * harmonic_number(s),
                reference_measurements: row.reference,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_bounds() {
        let rows = validation_suite(1).unwrap();
        let shape: Vec<(usize, usize)> = rows.iter().map(|r| (r.n, r.m)).collect();
        assert_eq!(shape, vec![(16, 24), (8, 8), (8, 28), (10, 21), (8, 8)]);
        assert!((rows[1].bound - 7.8e-3).abs() < 1e-4);
        assert!((rows[2].bound - 2.2e-3).abs() < 1e-4);
        assert_eq!(rows[4].modes, 32);
        assert_eq!(rows, validation_suite(1).unwrap());
    }
}
