use num_traits::ToPrimitive;

use super::characters::{character_row, CharacterTable, RowCache};
use super::partition::{factorial, partitions, Partition};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Coefficients smaller than this are treated as zero.
pub const COEFF_EPS: f64 = 1e-9;

pub const MAX_KENDALL_K: usize = 10;

/// A real function on `S_k` that is constant on conjugacy classes.
///
/// Holds both forms: one value per class (in [`partitions`] order) and the
/// sparse expansion `f = Σ c_λ χ^λ`. Equality compares the value form.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    k: usize,
    classes: Vec<Partition>,
    values: Vec<f64>,
    coefficients: Vec<(Partition, f64)>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.values == other.values
    }
}

fn check_finite(values: &[f64]) -> Result<()> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidCost(format!("class value {i} is not finite")));
    }
    Ok(())
}

impl ClassFunction {
    /// From one value per class, in [`partitions`] order.
    pub fn from_values(k: usize, values: Vec<f64>) -> Result<Self> {
        let classes = partitions(k)?;
        if values.len() != classes.len() {
            return Err(Error::InvalidCost(format!(
                "S_{k} has {} classes, got {} values",
                classes.len(),
                values.len()
            )));
        }
        check_finite(&values)?;
        let coefficients = class_dft(k, &values)?;
        Ok(ClassFunction { k, classes, values, coefficients })
    }

    /// From `(cycle type, value)` pairs covering every class exactly once.
    pub fn from_class_values(k: usize, pairs: &[(Partition, f64)]) -> Result<Self> {
        let classes = partitions(k)?;
        let mut values = vec![None; classes.len()];
        for (p, v) in pairs {
            if p.size() != k {
                return Err(Error::PartitionMismatch(k, p.size()));
            }
            let idx = class_index(&classes, p).expect("partition of k is listed");
            if values[idx].replace(*v).is_some() {
                return Err(Error::InvalidCost(format!("class {p} given twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InvalidCost(format!("class {} has no value", classes[i]))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(k, values)
    }

    /// From sparse coefficients `{(λ, c_λ)}`.
    pub fn from_coefficients(k: usize, coefficients: &[(Partition, f64)]) -> Result<Self> {
        Self::synthesize(k, coefficients, |shape| character_row(shape).map(std::sync::Arc::new))
    }

    /// As [`from_coefficients`](Self::from_coefficients), reusing cached character rows.
    pub fn from_coefficients_cached(k: usize, coefficients: &[(Partition, f64)], cache: &RowCache) -> Result<Self> {
        Self::synthesize(k, coefficients, |shape| cache.row(shape))
    }

    fn synthesize(
        k: usize,
        coefficients: &[(Partition, f64)],
        row: impl Fn(&Partition) -> Result<std::sync::Arc<Vec<i64>>>,
    ) -> Result<Self> {
        let classes = partitions(k)?;
        let mut merged: Vec<(Partition, f64)> = Vec::new();
        for (shape, c) in coefficients {
            if shape.size() != k {
                return Err(Error::PartitionMismatch(k, shape.size()));
            }
            if !c.is_finite() {
                return Err(Error::InvalidCost(format!("coefficient of {shape} is not finite")));
            }
            match merged.iter_mut().find(|(s, _)| s == shape) {
                Some(entry) => entry.1 += c,
                None => merged.push((shape.clone(), *c)),
            }
        }
        let mut values = vec![0.0; classes.len()];
        for (shape, c) in &merged {
            let chi = row(shape)?;
            for (v, &x) in values.iter_mut().zip(chi.iter()) {
                *v += c * x as f64;
            }
        }
        merged.retain(|(_, c)| c.abs() > COEFF_EPS);
        merged.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(ClassFunction { k, classes, values, coefficients: merged })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Non-zero coefficients in [`partitions`] order.
    pub fn coefficients(&self) -> &[(Partition, f64)] {
        &self.coefficients
    }

    pub fn coefficient(&self, shape: &Partition) -> f64 {
        self.coefficients.iter().find(|(s, _)| s == shape).map_or(0.0, |(_, c)| *c)
    }

    /// Number of non-zero coefficients, trivial irrep included.
    pub fn sparsity(&self) -> usize {
        self.coefficients.len()
    }

    pub fn class_value(&self, cycle_type: &Partition) -> Result<f64> {
        if cycle_type.size() != self.k {
            return Err(Error::PartitionMismatch(self.k, cycle_type.size()));
        }
        Ok(self.values[class_index(&self.classes, cycle_type).expect("partition of k is listed")])
    }

    pub fn eval(&self, sigma: &Permutation) -> f64 {
        self.values[class_index(&self.classes, &sigma.cycle_type()).expect("cycle type is a partition of k")]
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// First class (in [`partitions`] order) attaining the minimum.
    pub fn argmin_class(&self) -> &Partition {
        let min = self.min_value();
        let idx = self.values.iter().position(|&v| v == min).expect("non-empty");
        &self.classes[idx]
    }

    /// Every class within `tol` of the minimum, in [`partitions`] order.
    pub fn minimizing_classes(&self, tol: f64) -> Vec<&Partition> {
        let min = self.min_value();
        self.classes.iter().zip(&self.values).filter(|(_, &v)| v <= min + tol).map(|(p, _)| p).collect()
    }
}

pub(crate) fn class_index(classes: &[Partition], p: &Partition) -> Option<usize> {
    classes.binary_search_by(|q| p.cmp(q)).ok()
}

/// `c_λ = Σ_μ f(μ)·χ^λ(μ)/z_μ`, pruned at [`COEFF_EPS`].
pub fn class_dft(k: usize, values: &[f64]) -> Result<Vec<(Partition, f64)>> {
    let table = CharacterTable::new(k)?;
    if values.len() != table.labels().len() {
        return Err(Error::InvalidCost(format!(
            "S_{k} has {} classes, got {} values",
            table.labels().len(),
            values.len()
        )));
    }
    let order = factorial(k).to_f64().expect("k! fits f64");
    let weights: Vec<f64> = table.class_sizes().iter().map(|s| s.to_f64().expect("fits") / order).collect();
    Ok(table
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(i, shape)| {
            let c: f64 = (0..values.len()).map(|j| weights[j] * values[j] * table.value(i, j) as f64).sum();
            (c.abs() > COEFF_EPS).then(|| (shape.clone(), c))
        })
        .collect())
}

/// Hamming distance to the identity: `k − fix(σ)`.
pub fn hamming_cost(k: usize) -> Result<ClassFunction> {
    if k < 2 {
        return Err(Error::InvalidCost("Hamming cost needs k ≥ 2".into()));
    }
    let values = partitions(k)?.iter().map(|p| (k - p.multiplicity(1)) as f64).collect();
    ClassFunction::from_values(k, values)
}

/// Inversion count averaged over each conjugacy class.
pub fn kendall_class_average(k: usize) -> Result<ClassFunction> {
    if !(2..=MAX_KENDALL_K).contains(&k) {
        return Err(Error::TooLarge { what: "Kendall enumeration k", size: k as f64, limit: MAX_KENDALL_K as f64 });
    }
    let classes = partitions(k)?;
    let mut sums = vec![0u64; classes.len()];
    let mut counts = vec![0u64; classes.len()];
    let mut sigma = Permutation::identity(k);
    loop {
        let idx = class_index(&classes, &sigma.cycle_type()).unwrap();
        sums[idx] += sigma.inversions() as u64;
        counts[idx] += 1;
        match sigma.next_lex() {
            Some(next) => sigma = next,
            None => break,
        }
    }
    let values = sums.iter().zip(&counts).map(|(&s, &c)| s as f64 / c as f64).collect();
    ClassFunction::from_values(k, values)
}

/// Weighted sum `Σ w_i g_i`.
pub fn composite_cost(k: usize, components: &[(ClassFunction, f64)]) -> Result<ClassFunction> {
    let mut values = vec![0.0; partitions(k)?.len()];
    for (g, w) in components {
        if g.k() != k {
            return Err(Error::PartitionMismatch(k, g.k()));
        }
        for (v, x) in values.iter_mut().zip(g.values()) {
            *v += w * x;
        }
    }
    ClassFunction::from_values(k, values)
}
