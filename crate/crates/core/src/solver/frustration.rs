use crate::error::Result;
use crate::model::{EdgeCost, NetworkInstance, SpanningTree};

/// Selection-space size up to which tied minimisers are searched exhaustively.
pub const SELECTION_LIMIT: usize = 10_000;

/// Tolerance for treating two table values as tied, relative to the table's sup norm.
pub(crate) fn tie_tolerance(sup: f64) -> f64 {
    1e-9 * (1.0 + sup)
}

/// Minimiser set `D*_e` of each edge: offsets for cyclic instances, class
/// indices (in partition order) for symmetric ones.
pub fn edge_minimizers(instance: &NetworkInstance) -> Vec<Vec<usize>> {
    instance
        .costs()
        .iter()
        .map(|cost| {
            let values: &[f64] = match cost {
                EdgeCost::Cyclic(f) => f.values(),
                EdgeCost::Dihedral(f) => f.values(),
                EdgeCost::Class(f) => f.values(),
            };
            let min = values.iter().copied().fold(f64::INFINITY, f64::min);
            let sup = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let tol = tie_tolerance(sup);
            (0..values.len()).filter(|&x| values[x] <= min + tol).collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrustrationStatus {
    Free,
    Frustrated,
    /// Tied minimisers with a selection space above [`SELECTION_LIMIT`].
    Undetermined,
}

/// Holonomy of every fundamental cycle of the BFS spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolonomyReport {
    pub cycle_rank: usize,
    /// Fundamental cycles as `(edge, forward)` steps, one per non-tree edge.
    pub cycles: Vec<Vec<(usize, bool)>>,
    /// Holonomy per cycle under `selection`.
    pub holonomy: Vec<usize>,
    /// Chosen minimiser per edge: a zero-holonomy witness when one exists,
    /// otherwise the smallest minimiser of every edge.
    pub selection: Vec<usize>,
    pub status: FrustrationStatus,
}

impl HolonomyReport {
    pub fn is_frustration_free(&self) -> bool {
        self.status == FrustrationStatus::Free
    }

    pub fn frustrated_cycles(&self) -> usize {
        self.holonomy.iter().filter(|&&h| h != 0).count()
    }
}

fn holonomies(cycles: &[Vec<(usize, bool)>], selection: &[usize], c: usize) -> Vec<usize> {
    cycles
        .iter()
        .map(|cyc| cyc.iter().fold(0, |acc, &(e, fwd)| if fwd { (acc + selection[e]) % c } else { (acc + c - selection[e]) % c }))
        .collect()
}

/// `Σ ±d*_e (mod C)` around each fundamental cycle; forward steps add.
pub fn detect_frustration(instance: &NetworkInstance) -> Result<HolonomyReport> {
    let c = instance.cycle()?;
    let graph = instance.graph();
    let tree = SpanningTree::bfs(graph)?;
    let cycles: Vec<_> = tree.non_tree_edges.iter().map(|&e| tree.fundamental_cycle(graph, e)).collect();
    let minimizers = edge_minimizers(instance);
    let first: Vec<usize> = minimizers.iter().map(|d| d[0]).collect();
    let first_hol = holonomies(&cycles, &first, c);
    let report = |holonomy, selection, status| HolonomyReport {
        cycle_rank: graph.cycle_rank(),
        cycles: cycles.clone(),
        holonomy,
        selection,
        status,
    };
    if first_hol.iter().all(|&h| h == 0) {
        return Ok(report(first_hol, first, FrustrationStatus::Free));
    }
    let space = minimizers.iter().try_fold(1usize, |acc, d| acc.checked_mul(d.len()).filter(|&s| s <= SELECTION_LIMIT));
    let Some(space) = space else {
        return Ok(report(first_hol, first, FrustrationStatus::Undetermined));
    };
    if space == 1 {
        return Ok(report(first_hol, first, FrustrationStatus::Frustrated));
    }
    // odometer over tied selections, first edge slowest
    let mut idx = vec![0usize; minimizers.len()];
    loop {
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(report(first_hol, first, FrustrationStatus::Frustrated));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < minimizers[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
        let sel: Vec<usize> = idx.iter().zip(&minimizers).map(|(&i, d)| d[i]).collect();
        let hol = holonomies(&cycles, &sel, c);
        if hol.iter().all(|&h| h == 0) {
            return Ok(report(hol, sel, FrustrationStatus::Free));
        }
    }
}

/// `β·Δ_max` with `Δ_max = max_e (max f_e − min f_e)`.
pub fn frustration_gap_bound(instance: &NetworkInstance) -> f64 {
    let spread = instance.costs().iter().map(|c| c.max_value() - c.min_value()).fold(0.0, f64::max);
    instance.graph().cycle_rank() as f64 * spread
}
