use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::{instance_spectra, linearisation_params, modes_from_spectra, p_min_of};
use crate::model::{Assignment, NetworkInstance, SpanningTree};
use crate::sampler::{coupon_budget, distribution_from_modes, sample_from, MeasurementBatch};

use super::congruence::{congruences_from_modes, Congruence};
use super::exact::brute_force_solve;
use super::frustration::{detect_frustration, edge_minimizers, FrustrationStatus};
use super::tree::propagate;

pub const DEFAULT_DELTA: f64 = 0.01;
pub const MAX_RETRIES: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub p_min: f64,
    /// Conditional draws per attempt.
    #[serde(rename = "T")]
    pub t: usize,
    pub modes_expected: usize,
    pub modes_collected: usize,
    pub retries: usize,
    pub cost: f64,
    /// Set once the cost has been compared with the brute-force optimum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal_cost: Option<f64>,
    pub p_zero: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Fills `optimal` against exhaustive search.
    pub fn check_optimal(&mut self, instance: &NetworkInstance) -> Result<bool> {
        let best = brute_force_solve(instance)?;
        let ok = (self.cost - best.cost).abs() <= 1e-9 * (1.0 + best.cost.abs());
        self.optimal = Some(ok);
        self.optimal_cost = Some(best.cost);
        Ok(ok)
    }
}

enum TreeState {
    Ready(Vec<usize>),
    Missing(Vec<(usize, usize)>),
    Ambiguous { congruence: Congruence, exhausted: bool },
}

fn tree_state(instance: &NetworkInstance, tree: &SpanningTree, congruences: &[Congruence], fallback: &[usize]) -> TreeState {
    let edges = instance.graph().edges();
    let mut offsets = fallback.to_vec();
    let mut missing = Vec::new();
    let mut ambiguous: Option<(Congruence, bool)> = None;
    for &e in &tree.tree_edges {
        match congruences.iter().find(|cg| cg.edge == e) {
            Some(cg) if cg.is_resolved() => offsets[e] = cg.residues[0],
            Some(cg) => {
                let exhausted = cg.is_exhausted();
                // an edge that can still be narrowed outranks one that cannot
                if ambiguous.as_ref().is_none_or(|(_, ex)| *ex && !exhausted) {
                    ambiguous = Some((cg.clone(), exhausted));
                }
            }
            None => missing.push(edges[e]),
        }
    }
    if !missing.is_empty() {
        TreeState::Missing(missing)
    } else if let Some((congruence, exhausted)) = ambiguous {
        TreeState::Ambiguous { congruence, exhausted }
    } else {
        TreeState::Ready(offsets)
    }
}

/// Spectra, simulated sampling, congruence decoding and tree propagation.
///
/// Each attempt draws `⌈s·ln(s/δ)⌉` conditional samples on stream
/// `(seed, attempt)`; batches accumulate across at most [`MAX_RETRIES`]
/// retries while a tree edge is unobserved or still narrowable.
pub fn end_to_end_solve(instance: &NetworkInstance, seed: u64) -> Result<(Assignment, RunReport)> {
    let c = instance.cycle()?;
    let n = instance.node_count();
    let spectra = instance_spectra(instance)?;
    let modes = modes_from_spectra(instance, &spectra);
    let p_min = p_min_of(&modes, n)?;
    let params = linearisation_params(instance)?;
    let dist = distribution_from_modes(modes, &params)?;

    let holonomy = detect_frustration(instance)?;
    if holonomy.status != FrustrationStatus::Free {
        return Err(Error::Frustrated { frustrated_cycles: holonomy.frustrated_cycles().max(1), cycle_rank: holonomy.cycle_rank });
    }
    let tree = SpanningTree::bfs(instance.graph())?;
    let minimizers = edge_minimizers(instance);
    // edges without non-zero modes are flat; the holonomy witness fixes them
    let fallback: Vec<usize> =
        (0..instance.edge_count()).map(|e| if spectra[e].coeffs.iter().any(|&(k, _)| k != 0) { usize::MAX } else { holonomy.selection[e] }).collect();
    let flat_congruences: Vec<Congruence> = (0..instance.edge_count())
        .filter(|&e| fallback[e] != usize::MAX)
        .map(|e| {
            let (i, j) = instance.graph().edges()[e];
            Congruence { edge: e, i, j, multipliers: vec![], residues: vec![fallback[e]], available: vec![] }
        })
        .collect();

    let s = dist.modes.len();
    let t = coupon_budget(s, DEFAULT_DELTA);
    let mut batch = MeasurementBatch::empty(seed);
    let mut attempt = 0;
    loop {
        batch.merge(&sample_from(&dist, t, seed, attempt as u64, true)?);
        let mut congruences = congruences_from_modes(instance, &batch, &spectra, &minimizers)?;
        congruences.extend(flat_congruences.iter().cloned());
        let retry = match tree_state(instance, &tree, &congruences, &fallback) {
            TreeState::Ready(offsets) => {
                let assignment = Assignment::Cyclic(propagate(instance, &tree, &offsets, c));
                let cost = instance.eval_cost(&assignment)?;
                let report = RunReport {
                    p_min,
                    t,
                    modes_expected: s,
                    modes_collected: batch.distinct_modes(),
                    retries: attempt,
                    cost,
                    optimal: None,
                    optimal_cost: None,
                    p_zero: dist.p_zero,
                };
                return Ok((assignment, report));
            }
            TreeState::Ambiguous { congruence, exhausted: true } => {
                return Err(Error::Ambiguous { i: congruence.i, j: congruence.j, residues: congruence.residues });
            }
            state => state,
        };
        if attempt == MAX_RETRIES {
            return Err(match retry {
                TreeState::Missing(missing) => Error::IncompleteRecovery { missing, retries: attempt },
                TreeState::Ambiguous { congruence, .. } => {
                    Error::Ambiguous { i: congruence.i, j: congruence.j, residues: congruence.residues }
                }
                TreeState::Ready(_) => unreachable!(),
            });
        }
        attempt += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{topology, CostFunction};

    #[test]
    fn ring_cosine_reaches_optimum() {
        let inst = NetworkInstance::cyclic(topology::ring(4), vec![CostFunction::cosine(8, vec![1.0]).unwrap(); 4]).unwrap();
        let (mu, mut report) = end_to_end_solve(&inst, 3).unwrap();
        assert_eq!(mu.as_cyclic().unwrap()[0], 0);
        assert!(report.check_optimal(&inst).unwrap());
        assert_eq!(report.modes_expected, 8);
        assert_eq!(report.t, coupon_budget(8, DEFAULT_DELTA));
        let json = report.to_json();
        assert!(json.contains("\"T\"") && json.contains("\"optimal\": true"));
    }

    #[test]
    fn frustrated_input_is_refused() {
        let f = CostFunction::table(vec![1.0, -1.0]).unwrap();
        let inst = NetworkInstance::cyclic(topology::complete(3), vec![f; 3]).unwrap();
        let err = end_to_end_solve(&inst, 1).unwrap_err();
        assert!(matches!(err, Error::Frustrated { .. }));
        assert!(err.to_string().contains("hybrid"));
    }

    #[test]
    fn even_only_support_is_irreducibly_ambiguous() {
        // only frequencies 0, 2, 6 at C = 8: d and d + 4 are indistinguishable
        let f = CostFunction::table((0..8).map(|x| (4.0 * std::f64::consts::PI * x as f64 / 8.0).cos()).collect()).unwrap();
        let inst = NetworkInstance::cyclic(topology::path(2), vec![f]).unwrap();
        assert!(matches!(end_to_end_solve(&inst, 5), Err(Error::Ambiguous { i: 0, j: 1, .. })));
    }

    #[test]
    fn seeded_runs_repeat() {
        let inst = NetworkInstance::cyclic(topology::path(3), vec![CostFunction::cosine(6, vec![1.0, 0.2]).unwrap(); 2]).unwrap();
        assert_eq!(end_to_end_solve(&inst, 11).unwrap(), end_to_end_solve(&inst, 11).unwrap());
    }
}
