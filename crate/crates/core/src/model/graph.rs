use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Simple graph on nodes `0..n`.
///
/// Undirected graphs store each edge once as `(i, j)` with `i < j`; the stored
/// orientation is the one cost functions are evaluated in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    directed: bool,
}

impl Graph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one node".into()));
        }
        let mut seen = BTreeSet::new();
        for (idx, &(i, j)) in edges.iter().enumerate() {
            for node in [i, j] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, nodes: node_count });
                }
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("edge {idx} is a self-loop at node {i}")));
            }
            if !directed && i > j {
                return Err(Error::InvalidGraph(format!(
                    "edge {idx} ({i}, {j}) must be stored with i < j in an undirected graph"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidGraph(format!("edge {idx} ({i}, {j}) is duplicated")));
            }
        }
        Ok(Graph { node_count, edges, directed })
    }

    pub fn undirected(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(node_count, edges, false)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Neighbour lists as `(neighbour, edge index)`, ignoring direction.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (e, &(i, j)) in self.edges.iter().enumerate() {
            adj[i].push((j, e));
            adj[j].push((i, e));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.node_count];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.node_count
    }

    /// `β = m − n + 1` for a connected graph (clamped at zero).
    pub fn cycle_rank(&self) -> usize {
        (self.edge_count() + 1).saturating_sub(self.node_count)
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![None; self.node_count];
        for start in 0..self.node_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &(w, _) in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// Breadth-first spanning tree rooted at node 0.
///
/// `parent[v] = Some((p, e))` means `v` was reached from `p` through edge `e`.
/// Tree edges are listed in discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub parent: Vec<Option<(usize, usize)>>,
    pub order: Vec<usize>,
    pub depth: Vec<usize>,
    pub tree_edges: Vec<usize>,
    pub non_tree_edges: Vec<usize>,
}

impl SpanningTree {
    pub fn bfs(graph: &Graph) -> Result<Self> {
        let n = graph.node_count();
        let adj = graph.adjacency();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = vec![0];
        let mut in_tree = vec![false; graph.edge_count()];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut nbrs = adj[v].clone();
            nbrs.sort_unstable();
            for (w, e) in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    depth[w] = depth[v] + 1;
                    in_tree[e] = true;
                    order.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Disconnected);
        }
        let tree_edges = order.iter().filter_map(|&v| parent[v].map(|(_, e)| e)).collect();
        let non_tree_edges = (0..graph.edge_count()).filter(|&e| !in_tree[e]).collect();
        Ok(SpanningTree { parent, order, depth, tree_edges, non_tree_edges })
    }

    /// Fundamental cycle closed by non-tree edge `e = (u, v)`.
    ///
    /// Returned as `(edge, forward)` steps walking `u → … → v` through the
    /// tree and then back along `e` from `v` to `u`; `forward` is true when
    /// the step runs from the stored first endpoint to the second.
    pub fn fundamental_cycle(&self, graph: &Graph, e: usize) -> Vec<(usize, bool)> {
        let (u, v) = graph.edges()[e];
        // climb both endpoints to their lowest common ancestor
        let mut up_from_u = Vec::new();
        let mut up_from_v = Vec::new();
        let (mut a, mut b) = (u, v);
        while self.depth[a] > self.depth[b] {
            let (p, pe) = self.parent[a].unwrap();
            up_from_u.push((pe, a));
            a = p;
        }
        while self.depth[b] > self.depth[a] {
            let (p, pe) = self.parent[b].unwrap();
            up_from_v.push((pe, b));
            b = p;
        }
        while a != b {
            let (pa, ea) = self.parent[a].unwrap();
            up_from_u.push((ea, a));
            a = pa;
            let (pb, eb) = self.parent[b].unwrap();
            up_from_v.push((eb, b));
            b = pb;
        }
        let edges = graph.edges();
        let mut steps = Vec::new();
        // u up to the ancestor: each step goes child -> parent
        for &(te, child) in &up_from_u {
            steps.push((te, edges[te].0 == child));
        }
        // ancestor down to v: each step goes parent -> child
        for &(te, child) in up_from_v.iter().rev() {
            steps.push((te, edges[te].1 == child));
        }
        // close with v -> u along e, which is stored as (u, v)
        steps.push((e, false));
        steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::undirected(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_bad_orientation() {
        let err = Graph::undirected(2, vec![(1, 1)]).unwrap_err();
        assert!(err.to_string().contains("self-loop"));
        assert!(Graph::undirected(2, vec![(1, 0)]).is_err());
        assert!(Graph::undirected(2, vec![(0, 1), (0, 1)]).is_err());
        assert!(matches!(
            Graph::undirected(2, vec![(0, 5)]),
            Err(Error::NodeOutOfRange { node: 5, nodes: 2 })
        ));
        assert!(Graph::new(2, vec![(1, 0), (0, 1)], true).is_ok());
    }

    #[test]
    fn cycle_rank_and_bipartiteness() {
        let g = triangle();
        assert_eq!(g.cycle_rank(), 1);
        assert!(!g.is_bipartite());
        let square = Graph::undirected(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(square.is_bipartite());
        assert_eq!(square.max_degree(), 2);
    }

    #[test]
    fn bfs_tree_and_fundamental_cycle() {
        let g = triangle();
        let t = SpanningTree::bfs(&g).unwrap();
        assert_eq!(t.tree_edges, vec![0, 2]);
        assert_eq!(t.non_tree_edges, vec![1]);
        // closing edge (1,2): 1 -> 0 (against (0,1)), 0 -> 2 (along (0,2)), 2 -> 1 (against (1,2))
        let cyc = t.fundamental_cycle(&g, 1);
        assert_eq!(cyc, vec![(0, false), (2, true), (1, false)]);
    }

    #[test]
    fn disconnected_graph_has_no_tree() {
        let g = Graph::undirected(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(SpanningTree::bfs(&g), Err(Error::Disconnected));
    }
}
