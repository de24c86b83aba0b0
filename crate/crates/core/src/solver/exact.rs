//! Exact solvers: exhaustive enumeration and cutset-conditioned tree DP.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Assignment, DihedralElement, Domain, EdgeCost, NetworkInstance, SpanningTree};
use crate::symmetric::{partitions, Permutation};

pub const BRUTE_FORCE_LIMIT: f64 = 1e7;
pub const HYBRID_LIMIT: f64 = 1e6;

/// Strict improvement margin; equal costs keep the earlier assignment.
const IMPROVE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub assignment: Assignment,
    pub cost: f64,
}

/// Relative-element lookup for a finite group listed as `0..order`.
struct GroupTables {
    order: usize,
    /// `rel[a·order + b]` indexes the edge table for the pair `(a, b)`.
    rel: Vec<usize>,
}

fn group_tables(domain: Domain) -> Result<GroupTables> {
    Ok(match domain {
        Domain::Cyclic(c) => {
            GroupTables { order: c, rel: (0..c * c).map(|ab| (ab / c + c - ab % c) % c).collect() }
        }
        Domain::Dihedral(c) => {
            let order = 2 * c;
            let rel = (0..order * order)
                .map(|ab| {
                    let (a, b) = (DihedralElement::from_index(ab / order, c), DihedralElement::from_index(ab % order, c));
                    a.compose(b.inverse(c), c).index(c)
                })
                .collect();
            GroupTables { order, rel }
        }
        Domain::Symmetric(k) => {
            let classes = partitions(k)?;
            let perms = Permutation::all(k);
            let inv: Vec<Permutation> = perms.iter().map(Permutation::inverse).collect();
            let order = perms.len();
            let mut rel = Vec::with_capacity(order * order);
            for a in &inv {
                for b in &perms {
                    let ct = a.compose(b).cycle_type();
                    rel.push(classes.binary_search_by(|q| ct.cmp(q)).expect("cycle type is a partition of k"));
                }
            }
            GroupTables { order, rel }
        }
    })
}

fn edge_table(cost: &EdgeCost) -> &[f64] {
    match cost {
        EdgeCost::Cyclic(f) => f.values(),
        EdgeCost::Dihedral(f) => f.values(),
        EdgeCost::Class(f) => f.values(),
    }
}

fn to_assignment(domain: Domain, labels: &[usize]) -> Assignment {
    match domain {
        Domain::Cyclic(_) => Assignment::Cyclic(labels.to_vec()),
        Domain::Dihedral(c) => Assignment::Dihedral(labels.iter().map(|&x| DihedralElement::from_index(x, c)).collect()),
        Domain::Symmetric(k) => {
            let perms = Permutation::all(k);
            Assignment::Symmetric(labels.iter().map(|&x| perms[x].clone()).collect())
        }
    }
}

fn space_size(domain: Domain, n: usize) -> f64 {
    let order = match domain {
        Domain::Cyclic(c) => c as f64,
        Domain::Dihedral(c) => 2.0 * c as f64,
        Domain::Symmetric(k) => (1..=k).map(|i| i as f64).product(),
    };
    order.powi(n as i32)
}

/// Global optimum by enumeration with node 0 held at the identity.
///
/// Assignments are visited in lexicographic order and only a strict
/// improvement replaces the incumbent.
pub fn brute_force_solve(instance: &NetworkInstance) -> Result<Solution> {
    let domain = instance.domain();
    let n = instance.node_count();
    let size = space_size(domain, n);
    if size > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { what: "brute-force search space", size, limit: BRUTE_FORCE_LIMIT });
    }
    if n == 1 {
        let labels = [0];
        return Ok(Solution { assignment: to_assignment(domain, &labels), cost: 0.0 });
    }
    let tables = group_tables(domain)?;
    let order = tables.order;
    let edges = instance.graph().edges();
    let costs: Vec<&[f64]> = instance.costs().iter().map(edge_table).collect();
    let eval = |labels: &[usize]| -> f64 {
        edges.iter().zip(&costs).map(|(&(i, j), t)| t[tables.rel[labels[i] * order + labels[j]]]).sum()
    };
    let mut labels = vec![0usize; n];
    let mut best = labels.clone();
    let mut best_cost = eval(&labels);
    loop {
        let mut pos = n - 1;
        loop {
            labels[pos] += 1;
            if labels[pos] < order {
                break;
            }
            labels[pos] = 0;
            pos -= 1;
            if pos == 0 {
                return Ok(Solution { assignment: to_assignment(domain, &best), cost: best_cost });
            }
        }
        let cost = eval(&labels);
        if cost < best_cost - IMPROVE_EPS {
            best_cost = cost;
            best.copy_from_slice(&labels);
        }
    }
}

/// Exact cyclic solver: conditions on one endpoint of every non-tree edge
/// (`C^β` configurations at most) and solves the remaining tree by min-sum
/// dynamic programming.
pub fn hybrid_solve(instance: &NetworkInstance) -> Result<Solution> {
    let c = instance.cycle()?;
    let graph = instance.graph();
    let n = graph.node_count();
    let tree = SpanningTree::bfs(graph)?;
    let edges = graph.edges();
    let costs = instance.cyclic_costs()?;

    let cutset: Vec<usize> = tree
        .non_tree_edges
        .iter()
        .map(|&e| edges[e].1)
        .filter(|&v| v != 0)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let size = (c as f64).powi(cutset.len() as i32);
    if size > HYBRID_LIMIT {
        return Err(Error::TooLarge { what: "hybrid enumeration C^β", size, limit: HYBRID_LIMIT });
    }

    let mut fixed: Vec<Option<usize>> = vec![None; n];
    fixed[0] = Some(0);
    let mut config = vec![0usize; cutset.len()];
    let mut best: Option<Solution> = None;
    loop {
        for (&v, &x) in cutset.iter().zip(&config) {
            fixed[v] = Some(x);
        }
        let (mu, cost) = tree_dp(&tree, edges, &costs, &fixed, c);
        if best.as_ref().is_none_or(|b| cost < b.cost - IMPROVE_EPS) {
            best = Some(Solution { assignment: Assignment::Cyclic(mu), cost });
        }
        // odometer over cutset offsets, last node fastest
        let mut pos = config.len();
        loop {
            if pos == 0 {
                let mut sol = best.expect("at least one configuration");
                // report the cost of the assignment itself, not the DP sum
                sol.cost = instance.eval_cost(&sol.assignment)?;
                return Ok(sol);
            }
            pos -= 1;
            config[pos] += 1;
            if config[pos] < c {
                break;
            }
            config[pos] = 0;
        }
    }
}

/// Min-sum over the spanning tree with non-tree edges folded into node
/// potentials. Every non-tree edge has a fixed endpoint, so each of them
/// contributes a unary term or a constant.
fn tree_dp(
    tree: &SpanningTree,
    edges: &[(usize, usize)],
    costs: &[&crate::model::CostFunction],
    fixed: &[Option<usize>],
    c: usize,
) -> (Vec<usize>, f64) {
    let n = fixed.len();
    let inf = f64::INFINITY;
    let mut unary = vec![vec![0.0; c]; n];
    for (v, f) in fixed.iter().enumerate() {
        if let Some(x) = f {
            for (y, u) in unary[v].iter_mut().enumerate() {
                if y != *x {
                    *u = inf;
                }
            }
        }
    }
    let mut constant = 0.0;
    for &e in &tree.non_tree_edges {
        let (i, j) = edges[e];
        let f = costs[e];
        match (fixed[i], fixed[j]) {
            (Some(a), Some(b)) => constant += f.eval((a + c - b) % c),
            (None, Some(b)) => (0..c).for_each(|x| unary[i][x] += f.eval((x + c - b) % c)),
            (Some(a), None) => (0..c).for_each(|x| unary[j][x] += f.eval((a + c - x) % c)),
            (None, None) => unreachable!("every non-tree edge has a conditioned endpoint"),
        }
    }
    // leaves up: subtree[v][x] is the best cost below v with μ_v = x
    let mut subtree = unary;
    let mut choice = vec![vec![0usize; c]; n];
    for &v in tree.order.iter().rev() {
        let Some((p, e)) = tree.parent[v] else { continue };
        let f = costs[e];
        let parent_is_i = edges[e].0 == p;
        let mut msg = vec![inf; c];
        for (xp, m) in msg.iter_mut().enumerate() {
            for (xv, &below) in subtree[v].iter().enumerate() {
                let rel = if parent_is_i { (xp + c - xv) % c } else { (xv + c - xp) % c };
                let val = below + f.eval(rel);
                if val < *m {
                    *m = val;
                    choice[v][xp] = xv;
                }
            }
        }
        for (s, m) in subtree[p].iter_mut().zip(msg) {
            *s += m;
        }
    }
    let mut mu = vec![0usize; n];
    let root = &subtree[0];
    mu[0] = (0..c).fold(0, |b, x| if root[x] < root[b] { x } else { b });
    let total = root[mu[0]] + constant;
    for &v in &tree.order {
        if let Some((p, _)) = tree.parent[v] {
            mu[v] = choice[v][mu[p]];
        }
    }
    (mu, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{topology, CostFunction, DihedralCost, Graph};
    use crate::symmetric::hamming_cost;

    fn maxcut_cost() -> CostFunction {
        CostFunction::table(vec![1.0, -1.0]).unwrap()
    }

    #[test]
    fn frustrated_triangle() {
        let inst = NetworkInstance::cyclic(topology::complete(3), vec![maxcut_cost(); 3]).unwrap();
        let bf = brute_force_solve(&inst).unwrap();
        assert_eq!(bf.cost, -1.0);
        assert_eq!(bf.assignment, Assignment::Cyclic(vec![0, 0, 1]));
        assert_eq!(hybrid_solve(&inst).unwrap().cost, -1.0);
    }

    #[test]
    fn tree_instance_attains_sum_of_minima() {
        let costs = vec![
            CostFunction::table(vec![0.3, -0.2, 0.9, 0.1]).unwrap(),
            CostFunction::cosine(4, vec![2.0]).unwrap(),
            CostFunction::table(vec![1.0, 1.0, 0.5, 2.0]).unwrap(),
        ];
        let expect: f64 = costs.iter().map(CostFunction::min_value).sum();
        let inst = NetworkInstance::cyclic(topology::path(4), costs).unwrap();
        assert!((brute_force_solve(&inst).unwrap().cost - expect).abs() < 1e-12);
        assert!((hybrid_solve(&inst).unwrap().cost - expect).abs() < 1e-12);
    }

    #[test]
    fn symmetric_hamming_pair() {
        let inst = NetworkInstance::symmetric(topology::path(2), 3, vec![hamming_cost(3).unwrap()]).unwrap();
        let sol = brute_force_solve(&inst).unwrap();
        assert_eq!(sol.cost, 0.0);
        let Assignment::Symmetric(s) = &sol.assignment else { panic!() };
        assert_eq!(s[0], s[1]);
    }

    #[test]
    fn dihedral_enumeration_matches_eval() {
        let c = 3;
        let vals: Vec<f64> = (0..2 * c).map(|x| ((x * 7 + 3) % 5) as f64 - 2.0).collect();
        let f = DihedralCost::new(c, vals).unwrap();
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)], true).unwrap();
        let inst = NetworkInstance::dihedral(g, c, vec![f.clone(), f.clone(), f]).unwrap();
        let sol = brute_force_solve(&inst).unwrap();
        assert_eq!(inst.eval_cost(&sol.assignment).unwrap(), sol.cost);
        // naive scan through eval_cost over all assignments with g_0 free
        let all: Vec<DihedralElement> = (0..2 * c).map(|i| DihedralElement::from_index(i, c)).collect();
        let mut best = f64::INFINITY;
        for a in &all {
            for b in &all {
                for d in &all {
                    best = best.min(inst.eval_cost(&Assignment::Dihedral(vec![*a, *b, *d])).unwrap());
                }
            }
        }
        assert_eq!(sol.cost, best);
    }

    #[test]
    fn chorded_square_matches_brute_force() {
        let g = Graph::undirected(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        for seed in 0..20u64 {
            let costs = (0..5)
                .map(|e| {
                    let v = (0..4).map(|x| (((seed * 31 + e * 17 + x * 13) % 11) as f64) / 3.0 - 1.5).collect();
                    CostFunction::table(v).unwrap()
                })
                .collect();
            let inst = NetworkInstance::cyclic(g.clone(), costs).unwrap();
            let bf = brute_force_solve(&inst).unwrap();
            let hy = hybrid_solve(&inst).unwrap();
            assert!((bf.cost - hy.cost).abs() < 1e-9, "seed {seed}: {} vs {}", bf.cost, hy.cost);
        }
    }

    #[test]
    fn guards() {
        let big = NetworkInstance::cyclic(topology::path(6), vec![CostFunction::cosine(32, vec![1.0]).unwrap(); 5]).unwrap();
        assert!(matches!(brute_force_solve(&big), Err(Error::TooLarge { .. })));
        let dense = NetworkInstance::cyclic(topology::complete(7), vec![CostFunction::cosine(32, vec![1.0]).unwrap(); 21]).unwrap();
        assert!(matches!(hybrid_solve(&dense), Err(Error::TooLarge { .. })));
    }
}
