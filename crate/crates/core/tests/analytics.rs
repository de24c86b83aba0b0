use num_bigint::BigUint;
use proptest::prelude::*;

use fourier_nc::analytics::{cut_value, gate_counts, maxcut_reduce};
use fourier_nc::model::{Assignment, Graph};
use fourier_nc::symmetric::{crossovers, query_table};

/// Floating-point rendition of the gate formulas, valid while every
/// intermediate fits a u128 and no ceiling sits on an integer boundary.
fn float_gates(n: u64, m: u64, r: u64, c: u64) -> Option<(u128, u128)> {
    let q = (c as f64).log2().ceil() as u128;
    let mr = (m * r) as u128;
    let ln = ((m * r) as f64).ln();
    if (ln - ln.round()).abs() < 1e-9 {
        return None;
    }
    let reps = (mr * n as u128 * ln.ceil() as u128).max(1);
    let fourier = (mr + n as u128) * q * q * reps;
    let iters = std::f64::consts::PI * (c as f64).powf(n as f64 / 2.0) / 4.0;
    if iters > 1e12 || (iters - iters.round()).abs() < 1e-6 {
        return None;
    }
    Some((fourier, m as u128 * q * q * iters.ceil() as u128))
}

proptest! {
    #[test]
    fn gate_totals_match_float_formulas(n in 1u64..12, m in 1u64..60, r in 1u64..5, c in 2u64..200) {
        if let Some((fourier, grover)) = float_gates(n, m, r, c) {
            let g = gate_counts(n, m, r, c);
            prop_assert_eq!(g.fourier_total, BigUint::from(fourier));
            prop_assert_eq!(g.grover_total, BigUint::from(grover));
        }
    }

    #[test]
    fn maxcut_cost_is_edges_minus_twice_the_cut(
        n in 2usize..9,
        mask in prop::collection::vec(any::<bool>(), 36),
        labels in prop::collection::vec(0usize..2, 9),
    ) {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let edges: Vec<(usize, usize)> = pairs.zip(&mask).filter(|(_, &on)| on).map(|(e, _)| e).collect();
        let graph = Graph::undirected(n, edges).unwrap();
        let inst = maxcut_reduce(&graph).unwrap();
        let labels = labels[..n].to_vec();
        let cost = inst.eval_cost(&Assignment::Cyclic(labels.clone())).unwrap();
        let expect = graph.edge_count() as f64 - 2.0 * cut_value(&graph, &labels) as f64;
        prop_assert!((cost - expect).abs() < 1e-9);
    }
}

#[test]
fn query_counts_against_u128() {
    let ks: Vec<usize> = (2..=20).collect();
    let rows = query_table(&ks, 10, 3).unwrap();
    for row in &rows {
        let k = row.k as u128;
        let fact: u128 = (1..=k).product();
        let log = (k as f64).log2().ceil() as u128;
        assert_eq!(row.group_order, BigUint::from(fact));
        assert_eq!(row.classical, BigUint::from(fact * 10));
        assert_eq!(row.quantum, BigUint::from(30 * k * k * log));
    }
    // brute force: first k where 30·k²·⌈log₂ k⌉ < 10·k!
    let first_win = (2..=20u128)
        .find(|&k| 30 * k * k * ((k as f64).log2().ceil() as u128) < 10 * (1..=k).product::<u128>())
        .unwrap() as usize;
    assert_eq!(crossovers(&rows), vec![(first_win - 1, first_win)]);
}
