//! Irreducible characters of `S_k`.
//!
//! Shapes are encoded as beta-sets with `k` beads in a `u64` (bead `i` of a
//! shape `λ` sits at `λ_i + k − 1 − i`). Removing a border strip of length
//! `ℓ` moves one bead down by `ℓ` into an empty slot; its sign is the parity
//! of the beads jumped over. Two routes share this encoding: recursive
//! rim-hook removal for single values and a forward strip-adding sweep that
//! fills a whole column of the table at once.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::Zero;

use super::partition::{factorial, partitions, Partition};
use crate::error::{Error, Result};

/// Largest `k` representable with `k` beads in 64 bits.
pub const MAX_CHARACTER_K: usize = 30;

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_CHARACTER_K {
        return Err(Error::TooLarge { what: "character order k", size: k as f64, limit: MAX_CHARACTER_K as f64 });
    }
    Ok(())
}

pub(crate) fn beta_mask(shape: &Partition, beads: usize) -> u64 {
    let parts = shape.parts();
    (0..beads).fold(0u64, |mask, i| {
        let part = parts.get(i).copied().unwrap_or(0);
        mask | 1u64 << (part + beads - 1 - i)
    })
}

#[cfg(test)]
fn mask_to_partition(mask: u64, beads: usize) -> Partition {
    let mut parts = Vec::new();
    let mut i = 0;
    for pos in (0..64).rev() {
        if mask >> pos & 1 == 1 {
            let part = pos + 1 + i - beads;
            if part > 0 {
                parts.push(part);
            }
            i += 1;
        }
    }
    Partition::from_sorted(parts)
}

fn jumped_sign(mask: u64, low: usize, high: usize) -> i64 {
    // beads strictly between positions low and high
    let between = if high - low > 1 { (mask >> (low + 1)) & ((1u64 << (high - low - 1)) - 1) } else { 0 };
    if between.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `d_λ = k! / ∏ hook(i, j)`.
pub fn hook_dimension(shape: &Partition) -> BigUint {
    let mut hooks = BigUint::from(1u32);
    for (row, &len) in shape.parts().iter().enumerate() {
        for col in 0..len {
            hooks *= BigUint::from(shape.hook(row, col));
        }
    }
    factorial(shape.size()) / hooks
}

/// Class size `k!/z_μ`.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    factorial(cycle_type.size()) / cycle_type.centralizer_order()
}

pub fn class_sizes(k: usize) -> Result<Vec<(Partition, BigUint)>> {
    Ok(partitions(k)?.into_iter().map(|p| {
        let size = class_size(&p);
        (p, size)
    }).collect())
}

/// Rim-hook evaluator with memoisation on `(shape mask, parts consumed)`.
///
/// The memo is keyed by the class being evaluated, so one evaluator serves one
/// cycle type across many shapes.
struct RimHook<'a> {
    parts: &'a [usize],
    memo: HashMap<(u64, usize), i64>,
}

impl RimHook<'_> {
    fn eval(&mut self, mask: u64, idx: usize) -> i64 {
        if idx == self.parts.len() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(mask, idx)) {
            return v;
        }
        let len = self.parts[idx];
        let mut total = 0;
        let mut rest = mask;
        while rest != 0 {
            let pos = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pos >= len && mask >> (pos - len) & 1 == 0 {
                let moved = mask & !(1u64 << pos) | 1u64 << (pos - len);
                total += jumped_sign(mask, pos - len, pos) * self.eval(moved, idx + 1);
            }
        }
        self.memo.insert((mask, idx), total);
        total
    }
}

/// `χ^λ(μ)` by rim-hook removal.
pub fn character(shape: &Partition, class: &Partition) -> Result<i64> {
    let k = shape.size();
    if class.size() != k {
        return Err(Error::PartitionMismatch(k, class.size()));
    }
    check_k(k)?;
    let mut eval = RimHook { parts: class.parts(), memo: HashMap::new() };
    Ok(eval.eval(beta_mask(shape, k), 0))
}

/// Values of one irreducible character on every class of `S_k`, in
/// [`partitions`] order.
pub fn character_row(shape: &Partition) -> Result<Vec<i64>> {
    let k = shape.size();
    check_k(k)?;
    let mask = beta_mask(shape, k);
    Ok(partitions(k)?
        .iter()
        .map(|class| RimHook { parts: class.parts(), memo: HashMap::new() }.eval(mask, 0))
        .collect())
}

/// Column of the character table at class `μ` for every shape, built by
/// adding border strips of lengths `μ_ℓ, …, μ_1` to the empty shape.
fn strip_column(class: &Partition, beads: usize) -> HashMap<u64, i64> {
    let empty = (1u64 << beads) - 1;
    let mut layer: HashMap<u64, i64> = HashMap::from([(empty, 1)]);
    for &len in class.parts().iter().rev() {
        let mut next: HashMap<u64, i64> = HashMap::new();
        for (&mask, &coef) in &layer {
            let mut rest = mask;
            while rest != 0 {
                let pos = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let target = pos + len;
                if target < 64 && mask >> target & 1 == 0 {
                    let moved = mask & !(1u64 << pos) | 1u64 << target;
                    *next.entry(moved).or_insert(0) += jumped_sign(mask, pos, target) * coef;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        layer = next;
    }
    layer
}

/// Full character table of `S_k`; rows are irreps, columns classes, both in
/// [`partitions`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    k: usize,
    labels: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn new(k: usize) -> Result<Self> {
        check_k(k)?;
        let labels = partitions(k)?;
        let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, p)| (beta_mask(p, k), i)).collect();
        let mut values = vec![vec![0i64; labels.len()]; labels.len()];
        for (col, class) in labels.iter().enumerate() {
            for (mask, v) in strip_column(class, k) {
                values[index[&mask]][col] = v;
            }
        }
        let class_sizes = labels.iter().map(class_size).collect();
        Ok(CharacterTable { k, labels, values, class_sizes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Partitions labelling both rows and columns.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.labels.binary_search_by(|q| p.cmp(q)).ok()
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep][class]
    }

    pub fn row(&self, irrep: usize) -> &[i64] {
        &self.values[irrep]
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    /// `d_λ = χ^λ(1^k)`; the identity class is the last label.
    pub fn dimension(&self, irrep: usize) -> i64 {
        self.values[irrep][self.labels.len() - 1]
    }

    /// Integer CSV with a header row of class labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("irrep");
        for l in &self.labels {
            out.push_str(&format!(",\"{l}\""));
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.values) {
            out.push_str(&format!("\"{l}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Thread-safe cache of character rows, shared by repeated experiments.
#[derive(Debug, Default)]
pub struct RowCache {
    rows: Mutex<HashMap<Partition, std::sync::Arc<Vec<i64>>>>,
}

impl RowCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&self, shape: &Partition) -> Result<std::sync::Arc<Vec<i64>>> {
        if let Some(row) = self.rows.lock().unwrap().get(shape) {
            return Ok(row.clone());
        }
        let row = std::sync::Arc::new(character_row(shape)?);
        self.rows.lock().unwrap().insert(shape.clone(), row.clone());
        Ok(row)
    }
}

/// Largest irrep dimension of `S_k`.
pub fn max_dimension(k: usize) -> Result<BigUint> {
    Ok(partitions(k)?.iter().map(hook_dimension).max().unwrap_or_else(BigUint::zero))
}
