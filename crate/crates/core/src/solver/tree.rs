use crate::error::{Error, Result};
use crate::model::{Assignment, NetworkInstance, SpanningTree};

use super::congruence::Congruence;
use super::exact::Solution;
use super::frustration::edge_minimizers;

/// Propagates per-edge differences `μ_i − μ_j = d_e` down a spanning tree
/// from `μ_root = 0`. Only tree-edge entries of `offsets` are read.
pub(crate) fn propagate(instance: &NetworkInstance, tree: &SpanningTree, offsets: &[usize], c: usize) -> Vec<usize> {
    let edges = instance.graph().edges();
    let mut mu = vec![0usize; instance.node_count()];
    for &v in &tree.order {
        if let Some((p, e)) = tree.parent[v] {
            let d = offsets[e] % c;
            mu[v] = if edges[e].0 == p { (mu[p] + c - d) % c } else { (mu[p] + d) % c };
        }
    }
    mu
}

/// Assignment realising the resolved tree-edge differences of `congruences`.
pub fn solve_tree(instance: &NetworkInstance, congruences: &[Congruence]) -> Result<Assignment> {
    let c = instance.cycle()?;
    let tree = SpanningTree::bfs(instance.graph())?;
    let edges = instance.graph().edges();
    let mut offsets = vec![0usize; instance.edge_count()];
    let mut missing = Vec::new();
    for &e in &tree.tree_edges {
        match congruences.iter().find(|cg| cg.edge == e) {
            None => missing.push(edges[e]),
            Some(cg) if !cg.is_resolved() => {
                return Err(Error::Ambiguous { i: cg.i, j: cg.j, residues: cg.residues.clone() });
            }
            Some(cg) => offsets[e] = cg.residues[0],
        }
    }
    if !missing.is_empty() {
        return Err(Error::IncompleteRecovery { missing, retries: 0 });
    }
    Ok(Assignment::Cyclic(propagate(instance, &tree, &offsets, c)))
}

/// Tree solution taking the smallest minimiser on every tree edge,
/// whatever the holonomy of the closing edges.
pub fn tree_minimizer_solve(instance: &NetworkInstance) -> Result<Solution> {
    let c = instance.cycle()?;
    let tree = SpanningTree::bfs(instance.graph())?;
    let offsets: Vec<usize> = edge_minimizers(instance).iter().map(|d| d[0]).collect();
    let assignment = Assignment::Cyclic(propagate(instance, &tree, &offsets, c));
    let cost = instance.eval_cost(&assignment)?;
    Ok(Solution { assignment, cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{topology, CostFunction};

    fn resolved(instance: &NetworkInstance, e: usize, d: usize) -> Congruence {
        let (i, j) = instance.graph().edges()[e];
        Congruence { edge: e, i, j, multipliers: vec![1], residues: vec![d], available: vec![1] }
    }

    fn spike(c: usize, at: usize) -> CostFunction {
        CostFunction::table((0..c).map(|x| if x == at { -1.0 } else { 0.0 }).collect()).unwrap()
    }

    #[test]
    fn hand_propagation() {
        let inst = NetworkInstance::cyclic(topology::path(3), vec![spike(8, 4), spike(8, 4)]).unwrap();
        let cg = [resolved(&inst, 0, 4), resolved(&inst, 1, 4)];
        assert_eq!(solve_tree(&inst, &cg).unwrap(), Assignment::Cyclic(vec![0, 4, 0]));

        let one = NetworkInstance::cyclic(topology::path(2), vec![spike(2, 1)]).unwrap();
        assert_eq!(solve_tree(&one, &[resolved(&one, 0, 1)]).unwrap(), Assignment::Cyclic(vec![0, 1]));
    }

    #[test]
    fn frustration_free_triangle() {
        let inst = NetworkInstance::cyclic(topology::complete(3), vec![spike(3, 1), spike(3, 2), spike(3, 1)]).unwrap();
        let cg = [resolved(&inst, 0, 1), resolved(&inst, 1, 2)];
        let mu = solve_tree(&inst, &cg).unwrap();
        assert_eq!(mu, Assignment::Cyclic(vec![0, 2, 1]));
        assert_eq!(inst.eval_cost(&mu).unwrap(), -3.0);
    }

    #[test]
    fn unresolved_tree_edges_are_reported() {
        let inst = NetworkInstance::cyclic(topology::path(3), vec![spike(8, 4), spike(8, 4)]).unwrap();
        let mut amb = resolved(&inst, 1, 4);
        amb.residues = vec![0, 4];
        assert_eq!(
            solve_tree(&inst, &[resolved(&inst, 0, 4), amb]),
            Err(Error::Ambiguous { i: 1, j: 2, residues: vec![0, 4] })
        );
        assert!(matches!(
            solve_tree(&inst, &[resolved(&inst, 0, 4)]),
            Err(Error::IncompleteRecovery { missing, .. }) if missing == vec![(1, 2)]
        ));
    }
}
