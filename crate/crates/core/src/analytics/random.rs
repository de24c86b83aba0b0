//! Seeded instance families for property checks and experiments.

use std::f64::consts::PI;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::model::{topology, CostFunction, Graph, NetworkInstance};
use crate::solver::{detect_frustration, FrustrationStatus};
use crate::symmetric::{partitions, ClassFunction, Partition, RowCache};

/// Connected graph on `n` nodes: a random recursive tree plus each other
/// pair independently with probability `density`.
pub fn random_connected_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.gen::<f64>() < density {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Graph::undirected(n, edges).expect("simple connected graph")
}

/// `b − a·cos(2πℓ(x − d)/C)` with `gcd(ℓ, C) = 1`: unique minimiser `d`,
/// at most three non-zero coefficients.
pub fn planted_cosine<R: Rng>(cycle: usize, d: usize, rng: &mut R) -> CostFunction {
    let units: Vec<usize> = (1..cycle).filter(|l| l.gcd(&cycle) == 1).collect();
    let l = *units.choose(rng).expect("1 is a unit");
    let a = rng.gen_range(0.5..=1.5);
    let b = rng.gen_range(-1.0..=1.0);
    let table = (0..cycle)
        .map(|x| {
            let m = (l * ((x + cycle - d) % cycle)) % cycle;
            b - a * (2.0 * PI * m as f64 / cycle as f64).cos()
        })
        .collect();
    CostFunction::table(table).expect("finite")
}

/// Frustration-free instance with a planted optimum: `n ∈ 2..=max_nodes`,
/// `C ∈ 2..=max_cycle`, edge costs from [`planted_cosine`] centred on
/// `μ*_i − μ*_j`.
pub fn planted_instance<R: Rng>(max_nodes: usize, max_cycle: usize, rng: &mut R) -> (NetworkInstance, Vec<usize>) {
    let n = rng.gen_range(2..=max_nodes);
    let c = rng.gen_range(2..=max_cycle);
    let graph = random_connected_graph(n, 0.5, rng);
    let mu: Vec<usize> = (0..n).map(|_| rng.gen_range(0..c)).collect();
    let costs = graph.edges().iter().map(|&(i, j)| planted_cosine(c, (mu[i] + c - mu[j]) % c, rng)).collect();
    (NetworkInstance::cyclic(graph, costs).expect("valid"), mu)
}

/// Frustrated instance with random tables in `[−1, 1]` on a graph with at
/// least one cycle; rejection-sampled on the holonomy check.
pub fn frustrated_instance<R: Rng>(max_nodes: usize, max_cycle: usize, rng: &mut R) -> NetworkInstance {
    loop {
        let n = rng.gen_range(3..=max_nodes);
        let c = rng.gen_range(2..=max_cycle);
        let graph = random_connected_graph(n, 0.6, rng);
        if graph.cycle_rank() == 0 {
            continue;
        }
        let costs = (0..graph.edge_count())
            .map(|_| CostFunction::table((0..c).map(|_| rng.gen_range(-1.0..=1.0)).collect()).expect("finite"))
            .collect();
        let inst = NetworkInstance::cyclic(graph, costs).expect("valid");
        if detect_frustration(&inst).expect("connected").status == FrustrationStatus::Frustrated {
            return inst;
        }
    }
}

/// Arbitrary tables on a random connected graph, for spectral checks.
pub fn random_table_instance<R: Rng>(n: usize, cycle: usize, rng: &mut R) -> NetworkInstance {
    let graph = random_connected_graph(n, 0.5, rng);
    let costs = (0..graph.edge_count())
        .map(|_| CostFunction::table((0..cycle).map(|_| rng.gen_range(-1.0..=1.0)).collect()).expect("finite"))
        .collect();
    NetworkInstance::cyclic(graph, costs).expect("valid")
}

/// Triangle wave of period `period` peaking at 1, as breakpoints on `[0, C)`.
fn triangle_breakpoints(cycle: usize, period: usize, amp: f64, shift: f64) -> Vec<(f64, f64)> {
    let c = cycle as f64;
    let half = period as f64 / 2.0;
    let mut pts: Vec<(f64, f64)> = (0..2 * cycle / period)
        .map(|i| {
            let pos = (i as f64 * half + shift).rem_euclid(c);
            (pos, if i % 2 == 0 { amp } else { -amp })
        })
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts
}

/// Two-tier piecewise-linear cost `h₁·tri_C + h₂·tri_{C/2}` (both shifted),
/// truncated to harmonics `1..=2`: four non-zero modes per edge.
pub fn two_tier_pwl(cycle: usize, h2_ratio: f64, shift: f64) -> Result<CostFunction> {
    let a = triangle_breakpoints(cycle, cycle, 1.0, shift);
    let b = triangle_breakpoints(cycle, cycle / 2, h2_ratio, shift);
    let eval = |pts: &[(f64, f64)], x: f64| -> f64 {
        let c = cycle as f64;
        let len = pts.len();
        let next = pts.iter().position(|&(p, _)| p > x);
        let (l, r) = match next {
            Some(0) => ((pts[len - 1].0 - c, pts[len - 1].1), pts[0]),
            Some(i) => (pts[i - 1], pts[i]),
            None => (pts[len - 1], (pts[0].0 + c, pts[0].1)),
        };
        l.1 + (x - l.0) / (r.0 - l.0) * (r.1 - l.1)
    };
    let mut positions: Vec<f64> = a.iter().chain(&b).map(|p| p.0).collect();
    positions.sort_by(f64::total_cmp);
    positions.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
    let breakpoints = positions.iter().map(|&x| (x, eval(&a, x) + eval(&b, x))).collect();
    CostFunction::pwl_truncated(cycle, breakpoints, 2)
}

/// Random `r`-sparse class function on `S_k`: `r` distinct non-trivial
/// irreps with coefficients uniform on `[−1, 1]`, `|c| ≥ 0.01`, plus an
/// optional trivial term.
pub fn random_sparse_class_function<R: Rng>(
    k: usize,
    r: usize,
    with_trivial: bool,
    cache: &RowCache,
    rng: &mut R,
) -> Result<ClassFunction> {
    let labels = partitions(k)?;
    let nontrivial: Vec<&Partition> = labels.iter().skip(1).collect();
    let chosen: Vec<&&Partition> = nontrivial.choose_multiple(rng, r.min(nontrivial.len())).collect();
    let mut coeffs: Vec<(Partition, f64)> = chosen.into_iter().map(|p| ((*p).clone(), nonsmall_coefficient(rng))).collect();
    if with_trivial {
        coeffs.push((Partition::trivial(k), nonsmall_coefficient(rng)));
    }
    ClassFunction::from_coefficients_cached(k, &coeffs, cache)
}

pub(crate) fn nonsmall_coefficient<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let c: f64 = rng.gen_range(-1.0..=1.0);
        if c.abs() >= 0.01 {
            return c;
        }
    }
}

/// Complete graph on four nodes with `−cos(2πx/C)` on every edge
/// (twelve non-zero modes).
pub fn convergence_instance(cycle: usize) -> Result<NetworkInstance> {
    let g = topology::complete(4);
    let f = CostFunction::table((0..cycle).map(|x| -(2.0 * PI * x as f64 / cycle as f64).cos()).collect())?;
    NetworkInstance::cyclic(g, vec![f; 6])
}
