//! Linear congruences and their decoding from sampled modes.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fourier::EdgeSpectrum;
use crate::model::NetworkInstance;
use crate::sampler::MeasurementBatch;

/// Solutions of `a·x ≡ b (mod m)` as `x ≡ r (mod m/g)`, if any.
pub fn solve_linear_congruence(a: u64, b: u64, m: u64) -> Option<(u64, u64)> {
    let (a, b) = (a % m, b % m);
    let g = a.gcd(&m);
    if b % g != 0 {
        return None;
    }
    let modulus = m / g;
    if modulus == 1 {
        return Some((0, 1));
    }
    let inv = mod_inverse(a / g, modulus)?;
    let r = (b / g) as u128 * inv as u128 % modulus as u128;
    Some((r as u64, modulus))
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Merges `x ≡ r1 (mod m1)` and `x ≡ r2 (mod m2)` for arbitrary moduli.
pub fn crt_combine((r1, m1): (u64, u64), (r2, m2): (u64, u64)) -> Option<(u64, u64)> {
    let g = m1.gcd(&m2);
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u64;
    if !diff.is_multiple_of(g) {
        return None;
    }
    let lcm = m1 / g * m2;
    let step = m2 / g;
    let t = if step == 1 { 0 } else { (diff / g) as u128 * mod_inverse((m1 / g) % step, step)? as u128 % step as u128 };
    let x = (r1 as u128 + m1 as u128 * t) % lcm as u128;
    Some((x as u64, lcm))
}

/// `{d ∈ Z_C : k·d ≡ k·d* for some d* ∈ targets, for every k}`.
///
/// Each frequency `k` pins `d` modulo `C/gcd(k, C)`; classes are merged with
/// [`crt_combine`] and expanded back to `Z_C`.
pub fn residue_set(cycle: usize, frequencies: &[usize], targets: &[usize]) -> Vec<usize> {
    let c = cycle as u64;
    let mut classes: BTreeSet<(u64, u64)> = BTreeSet::from([(0, 1)]);
    for &k in frequencies {
        let mut next = BTreeSet::new();
        for &t in targets {
            let rhs = (k as u64 * t as u64) % c;
            let class = solve_linear_congruence(k as u64, rhs, c).expect("t is a solution");
            for &cls in &classes {
                if let Some(merged) = crt_combine(cls, class) {
                    next.insert(merged);
                }
            }
        }
        classes = next;
    }
    let mut out: BTreeSet<usize> = BTreeSet::new();
    for (r, m) in classes {
        let mut x = r;
        while x < c {
            out.insert(x as usize);
            x += m;
        }
    }
    out.into_iter().collect()
}

/// What the observed modes of one edge reveal about its offset difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub edge: usize,
    pub i: usize,
    pub j: usize,
    /// Observed frequencies `k_i`, ascending.
    pub multipliers: Vec<usize>,
    pub residues: Vec<usize>,
    /// Every non-zero frequency the edge carries.
    pub available: Vec<usize>,
}

impl Congruence {
    pub fn is_resolved(&self) -> bool {
        self.residues.len() == 1
    }

    /// True when every frequency of the edge has been observed.
    pub fn is_exhausted(&self) -> bool {
        self.multipliers.len() == self.available.len()
    }
}

/// One congruence per edge with at least one observed mode.
///
/// `minimizers[e]` is the minimiser set of edge `e`; each observed `k`
/// reveals `k·d*` and contributes the constraint `k·d ≡ k·d*`.
pub fn congruences_from_modes(
    instance: &NetworkInstance,
    batch: &MeasurementBatch,
    spectra: &[EdgeSpectrum],
    minimizers: &[Vec<usize>],
) -> Result<Vec<Congruence>> {
    let c = instance.cycle()?;
    let edges = instance.graph().edges();
    let mut observed: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(e, k) in batch.counts.keys() {
        let known = spectra.get(e).is_some_and(|s| k != 0 && s.coeffs.iter().any(|&(q, _)| q == k));
        if !known {
            return Err(Error::CorruptBatch(format!("label (edge {e}, k {k}) is not a mode of the instance")));
        }
        observed.entry(e).or_default().push(k);
    }
    Ok(observed
        .into_iter()
        .map(|(e, mut ks)| {
            ks.sort_unstable();
            let (i, j) = edges[e];
            Congruence {
                edge: e,
                i,
                j,
                residues: residue_set(c, &ks, &minimizers[e]),
                available: spectra[e].coeffs.iter().map(|&(k, _)| k).filter(|&k| k != 0).collect(),
                multipliers: ks,
            }
        })
        .collect())
}
