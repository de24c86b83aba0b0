//! Tree solver for class-function permutation networks.

use crate::error::{Error, Result};
use crate::model::{Assignment, NetworkInstance, SpanningTree};
use crate::solver::Solution;

use super::class_function::ClassFunction;
use super::partition::Partition;
use super::perm::Permutation;

/// Visited search nodes before the selection search gives up.
pub const DMPC_SEARCH_BUDGET: usize = 10_000;
/// Largest `k` whose class members are enumerated for cycle consistency.
pub const DMPC_MEMBER_K: usize = 8;

fn allowed_classes(costs: &[&ClassFunction], k: usize, hint: Option<&[Partition]>) -> Result<Vec<Vec<Partition>>> {
    match hint {
        Some(h) => {
            if h.len() != costs.len() {
                return Err(Error::InvalidHint(format!("{} classes given for {} edges", h.len(), costs.len())));
            }
            if let Some(bad) = h.iter().find(|p| p.size() != k) {
                return Err(Error::InvalidHint(format!("{bad} is not a cycle type of S_{k}")));
            }
            Ok(h.iter().map(|p| vec![p.clone()]).collect())
        }
        None => Ok(costs
            .iter()
            .map(|f| {
                let sup = f.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
                f.minimizing_classes(1e-9 * (1.0 + sup)).into_iter().cloned().collect()
            })
            .collect()),
    }
}

/// Class members with the canonical representative first, then lexicographic.
fn members(classes: &[Partition], all: &[Permutation]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = classes.iter().map(Permutation::from_cycle_type).collect();
    let rest: Vec<Permutation> =
        all.iter().filter(|s| classes.contains(&s.cycle_type()) && !out.contains(s)).cloned().collect();
    out.extend(rest);
    out
}

struct Search<'a> {
    tree: &'a SpanningTree,
    edges: &'a [(usize, usize)],
    /// Candidate relative permutations per tree edge.
    candidates: Vec<Vec<Permutation>>,
    allowed: &'a [Vec<Partition>],
    /// Non-tree edges keyed by the later endpoint in tree order.
    closing: Vec<Vec<usize>>,
    visited: usize,
}

impl Search<'_> {
    fn place(&self, sigma: &[Permutation], v: usize, rel: &Permutation) -> Permutation {
        let (p, e) = self.tree.parent[v].expect("non-root");
        if self.edges[e].0 == p {
            sigma[p].compose(rel)
        } else {
            sigma[p].compose(&rel.inverse())
        }
    }

    fn closes(&self, sigma: &[Permutation], v: usize) -> bool {
        self.closing[v].iter().all(|&e| {
            let (i, j) = self.edges[e];
            self.allowed[e].contains(&sigma[i].inverse().compose(&sigma[j]).cycle_type())
        })
    }

    fn dfs(&mut self, sigma: &mut Vec<Permutation>, pos: usize) -> Result<bool> {
        self.visited += 1;
        if self.visited > DMPC_SEARCH_BUDGET {
            return Err(Error::TooLarge {
                what: "permutation selection search",
                size: self.visited as f64,
                limit: DMPC_SEARCH_BUDGET as f64,
            });
        }
        if pos == self.tree.order.len() {
            return Ok(true);
        }
        let v = self.tree.order[pos];
        let (_, e) = self.tree.parent[v].expect("non-root");
        for c in 0..self.candidates[e].len() {
            let rel = self.candidates[e][c].clone();
            sigma[v] = self.place(sigma, v, &rel);
            if self.closes(sigma, v) && self.dfs(sigma, pos + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Chooses a minimising relative permutation per tree edge and propagates
/// from `σ_root = id`.
///
/// Allowed classes come from `hint` (one cycle type per edge) or from
/// evaluating every class. On graphs with cycles the members of those
/// classes are searched until every closing edge lands in its allowed set.
pub fn dmpc_solve(instance: &NetworkInstance, hint: Option<&[Partition]>) -> Result<Solution> {
    let costs = instance.class_costs()?;
    let k = costs.first().map_or(0, |f| f.k());
    let graph = instance.graph();
    let n = graph.node_count();
    let tree = SpanningTree::bfs(graph)?;
    let edges = graph.edges();
    let allowed = allowed_classes(&costs, k, hint)?;
    let identity = Permutation::identity(instance.domain().order_param());

    let mut sigma = vec![identity; n];
    if tree.non_tree_edges.is_empty() {
        for &v in &tree.order[1..] {
            let (p, e) = tree.parent[v].unwrap();
            let rel = Permutation::from_cycle_type(&allowed[e][0]);
            sigma[v] = if edges[e].0 == p { sigma[p].compose(&rel) } else { sigma[p].compose(&rel.inverse()) };
        }
    } else {
        if k > DMPC_MEMBER_K {
            return Err(Error::TooLarge { what: "class member enumeration k", size: k as f64, limit: DMPC_MEMBER_K as f64 });
        }
        let all = Permutation::all(k);
        let candidates = allowed.iter().map(|cls| members(cls, &all)).collect();
        let mut rank = vec![0usize; n];
        for (r, &v) in tree.order.iter().enumerate() {
            rank[v] = r;
        }
        let mut closing = vec![Vec::new(); n];
        for &e in &tree.non_tree_edges {
            let (i, j) = edges[e];
            closing[if rank[i] > rank[j] { i } else { j }].push(e);
        }
        let mut search = Search { tree: &tree, edges, candidates, allowed: &allowed, closing, visited: 0 };
        if !search.dfs(&mut sigma, 1)? {
            let beta = graph.cycle_rank();
            return Err(Error::Frustrated { frustrated_cycles: beta, cycle_rank: beta });
        }
    }
    let assignment = Assignment::Symmetric(sigma);
    let cost = instance.eval_cost(&assignment)?;
    Ok(Solution { assignment, cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::topology;
    use crate::solver::brute_force_solve;
    use crate::symmetric::{hamming_cost, partitions};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Cost with a unique minimum on one class.
    fn well(k: usize, at: &Partition) -> ClassFunction {
        let values = partitions(k).unwrap().iter().map(|q| if q == at { -1.0 } else { 0.5 }).collect();
        ClassFunction::from_values(k, values).unwrap()
    }

    #[test]
    fn hamming_edge() {
        let inst = NetworkInstance::symmetric(topology::path(2), 4, vec![hamming_cost(4).unwrap()]).unwrap();
        let sol = dmpc_solve(&inst, None).unwrap();
        assert_eq!(sol.cost, 0.0);
        assert_eq!(sol.assignment, Assignment::Symmetric(vec![Permutation::identity(4); 2]));
    }

    #[test]
    fn path_with_non_identity_minimizer() {
        let f = well(4, &p(&[3, 1]));
        let inst = NetworkInstance::symmetric(topology::path(3), 4, vec![f.clone(), f]).unwrap();
        let sol = dmpc_solve(&inst, None).unwrap();
        assert_eq!(sol.cost, -2.0);
        assert_eq!(sol.cost, brute_force_solve(&inst).unwrap().cost);
        let hinted = dmpc_solve(&inst, Some(&[p(&[3, 1]), p(&[3, 1])])).unwrap();
        assert_eq!(hinted.cost, -2.0);
    }

    #[test]
    fn transposition_triangle_is_frustrated() {
        // a product of two transpositions is never a transposition
        let f = well(3, &p(&[2, 1]));
        let inst = NetworkInstance::symmetric(topology::complete(3), 3, vec![f.clone(), f.clone(), f]).unwrap();
        assert!(matches!(dmpc_solve(&inst, None), Err(Error::Frustrated { cycle_rank: 1, .. })));
        assert!(brute_force_solve(&inst).unwrap().cost > -3.0);
    }

    #[test]
    fn three_cycle_triangle_closes() {
        let f = well(3, &p(&[3]));
        let inst = NetworkInstance::symmetric(topology::complete(3), 3, vec![f.clone(), f.clone(), f]).unwrap();
        let sol = dmpc_solve(&inst, None).unwrap();
        assert_eq!(sol.cost, -3.0);
    }

    #[test]
    fn bad_hints() {
        let inst = NetworkInstance::symmetric(topology::path(2), 4, vec![hamming_cost(4).unwrap()]).unwrap();
        assert!(matches!(dmpc_solve(&inst, Some(&[p(&[2, 1])])), Err(Error::InvalidHint(_))));
        assert!(matches!(dmpc_solve(&inst, Some(&[])), Err(Error::InvalidHint(_))));
    }
}
