use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use fourier_nc::symmetric::{
    character, class_dft, class_size, factorial, hook_dimension, partitions, CharacterTable, ClassFunction, Partition,
    Permutation,
};

/// Ways to distribute `parts` over variables so variable `j` receives total `target[j]`.
fn power_sum_coefficient(parts: &[usize], target: &mut [i64]) -> i64 {
    let Some((&first, rest)) = parts.split_first() else {
        return target.iter().all(|&t| t == 0) as i64;
    };
    let mut total = 0;
    for j in 0..target.len() {
        if target[j] >= first as i64 {
            target[j] -= first as i64;
            total += power_sum_coefficient(rest, target);
            target[j] += first as i64;
        }
    }
    total
}

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// Frobenius formula: the coefficient of `x^{λ+δ}` in `a_δ·p_μ`, with as many
/// variables as `λ` has rows.
fn frobenius(shape: &[usize], class: &[usize]) -> i64 {
    let l = shape.len();
    let delta: Vec<i64> = (0..l).map(|i| (l - 1 - i) as i64).collect();
    let mut total = 0;
    for w in Permutation::all(l) {
        let mut target: Vec<i64> = (0..l).map(|j| shape[j] as i64 + delta[j] - delta[w.apply(j)]).collect();
        if target.iter().all(|&t| t >= 0) {
            total += sign(w.images()) * power_sum_coefficient(class, &mut target);
        }
    }
    total
}

#[test]
fn beta_set_characters_agree_with_frobenius() {
    for k in 1..=7 {
        let table = CharacterTable::new(k).unwrap();
        for (i, shape) in table.labels().iter().enumerate() {
            for (j, class) in table.labels().iter().enumerate() {
                assert_eq!(table.value(i, j), frobenius(shape.parts(), class.parts()), "k={k} {shape} at {class}");
            }
        }
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for k in 1..=6 {
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        for sigma in Permutation::all(k) {
            *counts.entry(sigma.cycle_type()).or_default() += 1;
        }
        let classes = partitions(k).unwrap();
        assert_eq!(counts.len(), classes.len());
        for p in &classes {
            assert_eq!(class_size(p), BigUint::from(counts[p]), "k={k} {p}");
        }
    }
    for k in [10, 20, 30] {
        let sum: BigUint = partitions(k).unwrap().iter().map(class_size).sum();
        assert_eq!(sum, factorial(k));
    }
}

#[test]
fn squared_dimensions_sum_to_group_order() {
    for k in [5, 12, 20] {
        let sum: BigUint = partitions(k).unwrap().iter().map(|p| hook_dimension(p).pow(2)).sum();
        assert_eq!(sum, factorial(k), "k={k}");
    }
}

#[test]
fn single_character_matches_table() {
    let table = CharacterTable::new(8).unwrap();
    for (i, shape) in table.labels().iter().enumerate().step_by(3) {
        for (j, class) in table.labels().iter().enumerate() {
            assert_eq!(character(shape, class).unwrap(), table.value(i, j));
        }
    }
}

#[test]
fn class_transform_round_trips() {
    for k in 3..=7 {
        let classes = partitions(k).unwrap();
        let values: Vec<f64> = (0..classes.len()).map(|i| ((i * 37 + 11) % 13) as f64 - 6.0).collect();
        let coeffs = class_dft(k, &values).unwrap();
        let rebuilt = ClassFunction::from_coefficients(k, &coeffs).unwrap();
        for (a, b) in rebuilt.values().iter().zip(&values) {
            assert!((a - b).abs() < 1e-9, "k={k}");
        }
        // Plancherel over the group: E|f|² = Σ c_λ²
        let order = factorial(k).to_f64().unwrap();
        let energy: f64 =
            classes.iter().zip(&values).map(|(p, v)| class_size(p).to_f64().unwrap() / order * v * v).sum();
        let coeff_energy: f64 = coeffs.iter().map(|(_, c)| c * c).sum();
        assert!((energy - coeff_energy).abs() < 1e-9 * energy.max(1.0));
    }
}

#[test]
fn class_function_evaluates_on_permutations() {
    let f = ClassFunction::from_values(4, vec![4.0, 3.0, 2.0, 1.0, 0.0]).unwrap();
    for sigma in Permutation::all(4) {
        let idx = partitions(4).unwrap().iter().position(|p| *p == sigma.cycle_type()).unwrap();
        assert_eq!(f.eval(&sigma), f.values()[idx]);
    }
}
