//! Standard graph families.

use super::graph::Graph;

fn build(n: usize, mut edges: Vec<(usize, usize)>) -> Graph {
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    Graph::undirected(n, edges).expect("generated edges are simple")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn ring(n: usize) -> Graph {
    assert!(n >= 3, "ring needs at least 3 nodes");
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    build(rows * cols, edges)
}

/// Two copies of `K_clique` joined by a single bridge edge.
pub fn barbell(clique: usize) -> Graph {
    let mut edges = Vec::new();
    for offset in [0, clique] {
        for i in 0..clique {
            for j in i + 1..clique {
                edges.push((offset + i, offset + j));
            }
        }
    }
    edges.push((clique - 1, clique));
    build(2 * clique, edges)
}
