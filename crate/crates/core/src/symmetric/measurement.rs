use num_traits::ToPrimitive;
use rand::distributions::{Distribution, WeightedIndex};

use super::characters::{character_row, class_size, hook_dimension};
use super::class_function::{ClassFunction, COEFF_EPS};
use super::partition::{factorial, Partition};
use crate::error::{Error, Result};
use crate::rng::trial_rng;
use crate::solver::MAX_RETRIES;

/// Irrep-label law of one measurement: `P(λ) ∝ d_λ²·c_λ²`.
#[derive(Debug, Clone, PartialEq)]
pub struct SkDistribution {
    pub k: usize,
    /// Probability of the trivial label.
    pub trivial_mass: f64,
    /// Non-trivial labels with non-zero coefficient, in partition order.
    pub labels: Vec<Partition>,
    /// Law over `labels` conditioned on a non-trivial outcome.
    pub conditional: Vec<f64>,
}

pub fn sk_measurement_distribution(f: &ClassFunction) -> Result<SkDistribution> {
    let k = f.k();
    let trivial = Partition::trivial(k);
    let weight = |shape: &Partition, c: f64| {
        let d = hook_dimension(shape).to_f64().expect("dimension fits f64");
        d * d * c * c
    };
    let mut trivial_w = 0.0;
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for (shape, c) in f.coefficients() {
        if *shape == trivial {
            trivial_w = weight(shape, *c);
        } else {
            labels.push(shape.clone());
            weights.push(weight(shape, *c));
        }
    }
    let rest: f64 = weights.iter().sum();
    let total = trivial_w + rest;
    if total == 0.0 {
        return Err(Error::ZeroSpectrum);
    }
    let conditional = weights.iter().map(|w| w / rest).collect();
    Ok(SkDistribution { k, trivial_mass: trivial_w / total, labels, conditional })
}

/// Default draw budget `⌈ln(s/δ)/p_min⌉`: every label appears with
/// probability at least `1 − δ`. Equals `⌈s·ln(s/δ)⌉` for a uniform law.
pub fn label_budget(dist: &SkDistribution, delta: f64) -> usize {
    let s = dist.labels.len();
    if s == 0 {
        return 0;
    }
    let p = dist.conditional.iter().copied().fold(f64::INFINITY, f64::min);
    ((s as f64 / delta).ln() / p).ceil().max(1.0) as usize
}

/// `c_λ = (1/k!)·Σ_μ |C_μ|·f(μ)·χ^λ(μ)`: one character-weighted query.
fn read_coefficient(f: &ClassFunction, shape: &Partition) -> Result<f64> {
    let order = factorial(f.k()).to_f64().expect("k! fits f64");
    let row = character_row(shape)?;
    Ok(f.classes()
        .iter()
        .zip(f.values())
        .zip(&row)
        .map(|((mu, v), &chi)| class_size(mu).to_f64().expect("fits") / order * v * chi as f64)
        .sum())
}

/// Samples non-trivial labels until each active one has appeared, then reads
/// every coefficient (trivial included) by a character query.
///
/// `budget` defaults to [`label_budget`] with `δ = 0.01`, and the default
/// path tops up with [`MAX_RETRIES`] further batches on streams `(seed, 1..)`.
pub fn sk_recover_support(f: &ClassFunction, budget: Option<usize>, seed: u64) -> Result<Vec<(Partition, f64)>> {
    let dist = sk_measurement_distribution(f)?;
    let (batch, batches) = match budget {
        Some(b) => (b, 1),
        None => (label_budget(&dist, 0.01), 1 + MAX_RETRIES),
    };
    let mut seen = vec![false; dist.labels.len()];
    if !dist.labels.is_empty() {
        let picker = WeightedIndex::new(&dist.conditional).expect("positive weights");
        let mut distinct = 0;
        'batches: for attempt in 0..batches {
            let mut rng = trial_rng(seed, attempt as u64);
            for _ in 0..batch {
                let i = picker.sample(&mut rng);
                if !seen[i] {
                    seen[i] = true;
                    distinct += 1;
                    if distinct == seen.len() {
                        break 'batches;
                    }
                }
            }
        }
        if distinct < seen.len() {
            let missing_mass = seen.iter().zip(&dist.conditional).filter(|(s, _)| !**s).map(|(_, p)| p).sum();
            return Err(Error::BudgetExhausted { budget: batch * batches, missing_mass });
        }
    }
    let mut out = Vec::new();
    let trivial = Partition::trivial(f.k());
    for shape in std::iter::once(&trivial).chain(&dist.labels) {
        let c = read_coefficient(f, shape)?;
        if c.abs() > COEFF_EPS {
            out.push((shape.clone(), c));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::{class_dft, hamming_cost};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hamming_concentrates_on_standard_irrep() {
        let d = sk_measurement_distribution(&hamming_cost(4).unwrap()).unwrap();
        assert_eq!(d.labels, vec![p(&[3, 1])]);
        assert_eq!(d.conditional, vec![1.0]);
        // trivial: 1·9, standard: 9·1
        assert!((d.trivial_mass - 0.5).abs() < 1e-12);
    }

    #[test]
    fn constant_function_is_all_trivial() {
        let f = ClassFunction::from_values(4, vec![2.0; 5]).unwrap();
        let d = sk_measurement_distribution(&f).unwrap();
        assert_eq!(d.trivial_mass, 1.0);
        assert!(d.labels.is_empty());
        assert_eq!(sk_recover_support(&f, None, 0).unwrap(), class_dft(4, f.values()).unwrap());
        let zero = ClassFunction::from_values(4, vec![0.0; 5]).unwrap();
        assert_eq!(sk_measurement_distribution(&zero), Err(Error::ZeroSpectrum));
    }

    #[test]
    fn dimension_squared_ratio() {
        // dims 3 and 2 at equal |c|
        let f = ClassFunction::from_coefficients(4, &[(p(&[3, 1]), 0.5), (p(&[2, 2]), -0.5)]).unwrap();
        let d = sk_measurement_distribution(&f).unwrap();
        assert!((d.conditional[0] / d.conditional[1] - 9.0 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn hamming_five_recovery() {
        let f = hamming_cost(5).unwrap();
        let got = sk_recover_support(&f, None, 3).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].0, p(&[5]));
        assert!((got[0].1 - 4.0).abs() < 1e-12);
        assert_eq!(got[1].0, p(&[4, 1]));
        assert!((got[1].1 + 1.0).abs() < 1e-12);
        assert_eq!(got, class_dft(5, f.values()).unwrap());
    }

    #[test]
    fn single_label_needs_one_draw() {
        let f = ClassFunction::from_coefficients(5, &[(p(&[3, 2]), 0.7)]).unwrap();
        assert_eq!(sk_recover_support(&f, Some(1), 9).unwrap(), class_dft(5, f.values()).unwrap());
    }

    #[test]
    fn exhausted_budget_reports_missing_mass() {
        let f = ClassFunction::from_coefficients(6, &[(p(&[5, 1]), 1.0), (p(&[1; 6]), 1.0), (p(&[4, 2]), 0.3)]).unwrap();
        match sk_recover_support(&f, Some(1), 0) {
            Err(Error::BudgetExhausted { budget: 1, missing_mass }) => assert!(missing_mass > 0.0 && missing_mass < 1.0),
            other => panic!("{other:?}"),
        }
    }
}
