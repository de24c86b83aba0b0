use crate::error::Result;
use crate::model::{CostFunction, Graph, NetworkInstance};

/// `C = 2` instance with `f(x) = cos(πx)` on every edge, so that
/// `H(μ) = m − 2·cut(μ)`.
pub fn maxcut_reduce(graph: &Graph) -> Result<NetworkInstance> {
    let f = CostFunction::cosine(2, vec![1.0])?;
    NetworkInstance::cyclic(graph.clone(), vec![f; graph.edge_count()])
}

/// Edges whose endpoints carry different labels.
pub fn cut_value(graph: &Graph, labels: &[usize]) -> usize {
    graph.edges().iter().filter(|&&(i, j)| labels[i] != labels[j]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{topology, Assignment};

    #[test]
    fn triangle_identity() {
        let g = topology::complete(3);
        let inst = maxcut_reduce(&g).unwrap();
        let mu = vec![0, 0, 1];
        assert_eq!(cut_value(&g, &mu), 2);
        assert_eq!(inst.eval_cost(&Assignment::Cyclic(mu)).unwrap(), -1.0);
    }

    #[test]
    fn bipartite_coloring_cuts_everything() {
        let g = topology::grid(2, 3);
        let inst = maxcut_reduce(&g).unwrap();
        let mu: Vec<usize> = (0..6).map(|v| (v / 3 + v % 3) % 2).collect();
        assert_eq!(cut_value(&g, &mu), g.edge_count());
        assert_eq!(inst.eval_cost(&Assignment::Cyclic(mu)).unwrap(), -(g.edge_count() as f64));
    }
}
