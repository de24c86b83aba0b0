//! Fourier analysis over `Z_C` and `D_C`.
//!
//! Conventions: `f̂(k) = (1/C) Σ_x f(x) ω^{−kx}` with `ω = e^{2πi/C}`, and a
//! coefficient counts as non-zero when its magnitude exceeds [`PRUNE_EPS`].

mod dihedral;

use std::collections::BTreeMap;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde_json::json;

use crate::error::{Error, Result};
use crate::model::{CostFunction, CostKind, NetworkInstance};

pub use dihedral::{dihedral_dft, DihedralSpectrum, OneDimIrrep};

pub const PRUNE_EPS: f64 = 1e-12;

/// Upper limit on `C^n` for the dense oracle.
pub const DENSE_LIMIT: f64 = 1e6;

/// Full normalised DFT of a real table.
pub fn dense_dft(values: &[f64]) -> Vec<Complex64> {
    let c = values.len();
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(c).process(&mut buf);
    let scale = 1.0 / c as f64;
    buf.iter_mut().for_each(|z| *z *= scale);
    buf
}

/// Sparse spectrum of one edge cost.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSpectrum {
    pub edge: usize,
    pub cycle: usize,
    pub coeffs: Vec<(usize, Complex64)>,
}

impl EdgeSpectrum {
    /// Number of non-zero coefficients, DC included.
    pub fn sparsity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.iter().find(|(q, _)| *q == k).map_or(Complex64::new(0.0, 0.0), |(_, z)| *z)
    }

    /// Inverse transform of the sparse list.
    pub fn reconstruct(&self) -> Vec<f64> {
        let c = self.cycle;
        (0..c)
            .map(|x| {
                self.coeffs
                    .iter()
                    .map(|&(k, z)| z * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * ((k * x) % c) as f64 / c as f64))
                    .sum::<Complex64>()
                    .re
            })
            .collect()
    }
}

pub fn edge_dft(edge: usize, cost: &CostFunction) -> EdgeSpectrum {
    let coeffs = dense_dft(cost.values()).into_iter().enumerate().filter(|(_, z)| z.norm() > PRUNE_EPS).collect();
    EdgeSpectrum { edge, cycle: cost.cycle(), coeffs }
}

pub fn instance_spectra(instance: &NetworkInstance) -> Result<Vec<EdgeSpectrum>> {
    Ok(instance.cyclic_costs()?.into_iter().enumerate().map(|(e, f)| edge_dft(e, f)).collect())
}

/// Non-zero coefficient of `H` on the anti-diagonal of edge `(i, j)`:
/// frequency `k_i` at node `i`, `k_j = −k_i` at node `j`, zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalMode {
    pub edge: usize,
    pub i: usize,
    pub j: usize,
    pub k_i: usize,
    pub k_j: usize,
    pub coeff: Complex64,
}

impl GlobalMode {
    pub fn frequency_vector(&self, n: usize) -> Vec<usize> {
        let mut k = vec![0; n];
        k[self.i] = self.k_i;
        k[self.j] = self.k_j;
        k
    }

    pub fn weight(&self) -> f64 {
        self.coeff.norm_sqr()
    }
}

pub fn modes_from_spectra(instance: &NetworkInstance, spectra: &[EdgeSpectrum]) -> Vec<GlobalMode> {
    let edges = instance.graph().edges();
    spectra
        .iter()
        .flat_map(|s| {
            let (i, j) = edges[s.edge];
            s.coeffs.iter().filter(|(k, _)| *k != 0).map(move |&(k, coeff)| GlobalMode {
                edge: s.edge,
                i,
                j,
                k_i: k,
                k_j: (s.cycle - k) % s.cycle,
                coeff,
            })
        })
        .collect()
}

pub fn global_modes(instance: &NetworkInstance) -> Result<Vec<GlobalMode>> {
    let spectra = instance_spectra(instance)?;
    Ok(modes_from_spectra(instance, &spectra))
}

/// `Ĥ(0)`: the mean of `H` over all assignments.
pub fn zero_mode(instance: &NetworkInstance) -> Result<Complex64> {
    Ok(instance_spectra(instance)?.iter().map(|s| s.coeff(0)).sum())
}

/// Global modes merged by frequency vector.
pub fn aggregate_modes(modes: &[GlobalMode], n: usize) -> BTreeMap<Vec<usize>, Complex64> {
    let mut out: BTreeMap<Vec<usize>, Complex64> = BTreeMap::new();
    for m in modes {
        *out.entry(m.frequency_vector(n)).or_default() += m.coeff;
    }
    out
}

/// Dense `Ĥ` over `Z_C^n`, indexed by `Σ_v k_v·C^v`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSpectrum {
    pub cycle: usize,
    pub nodes: usize,
    pub values: Vec<Complex64>,
}

impl DenseSpectrum {
    pub fn index(&self, k: &[usize]) -> usize {
        k.iter().rev().fold(0, |acc, &x| acc * self.cycle + x)
    }

    pub fn get(&self, k: &[usize]) -> Complex64 {
        self.values[self.index(k)]
    }

    pub fn frequency(&self, mut index: usize) -> Vec<usize> {
        (0..self.nodes)
            .map(|_| {
                let x = index % self.cycle;
                index /= self.cycle;
                x
            })
            .collect()
    }

    pub fn support(&self, eps: f64) -> Vec<Vec<usize>> {
        (0..self.values.len()).filter(|&i| self.values[i].norm() > eps).map(|i| self.frequency(i)).collect()
    }
}

/// Evaluates `H` on every assignment and transforms it axis by axis with
/// direct `O(C)` sums. Shares no code with [`edge_dft`].
pub fn brute_force_global_dft(instance: &NetworkInstance) -> Result<DenseSpectrum> {
    let c = instance.cycle()?;
    let n = instance.node_count();
    let size = (c as f64).powi(n as i32);
    if size > DENSE_LIMIT {
        return Err(Error::TooLarge { what: "dense DFT size C^n", size, limit: DENSE_LIMIT });
    }
    let total = c.pow(n as u32);
    let costs = instance.cyclic_costs()?;
    let edges = instance.graph().edges();
    let mut data: Vec<Complex64> = (0..total)
        .map(|idx| {
            let mu: Vec<usize> = (0..n).map(|v| idx / c.pow(v as u32) % c).collect();
            let h: f64 = edges.iter().zip(&costs).map(|(&(i, j), f)| f.eval((mu[i] + c - mu[j]) % c)).sum();
            Complex64::new(h, 0.0)
        })
        .collect();
    let roots: Vec<Complex64> =
        (0..c).map(|t| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * t as f64 / c as f64)).collect();
    let mut line = vec![Complex64::new(0.0, 0.0); c];
    for axis in 0..n {
        let stride = c.pow(axis as u32);
        for base in 0..total {
            if base / stride % c != 0 {
                continue;
            }
            for (k, out) in line.iter_mut().enumerate() {
                *out = (0..c).map(|x| data[base + x * stride] * roots[(k * x) % c]).sum::<Complex64>() / c as f64;
            }
            for (k, &z) in line.iter().enumerate() {
                data[base + k * stride] = z;
            }
        }
    }
    Ok(DenseSpectrum { cycle: c, nodes: n, values: data })
}

/// `min |Ĥ(k)|² / Σ_{k'≠0} |Ĥ(k')|²` over non-zero modes.
pub fn p_min(instance: &NetworkInstance) -> Result<f64> {
    let modes = global_modes(instance)?;
    p_min_of(&modes, instance.node_count())
}

pub fn p_min_of(modes: &[GlobalMode], n: usize) -> Result<f64> {
    let weights: Vec<f64> = aggregate_modes(modes, n)
        .into_values()
        .map(|z| z.norm_sqr())
        .filter(|&w| w.sqrt() > PRUNE_EPS)
        .collect();
    if weights.is_empty() {
        return Err(Error::NoModes);
    }
    let total: f64 = weights.iter().sum();
    Ok(weights.iter().copied().fold(f64::INFINITY, f64::min) / total)
}

/// A closed-form lower bound on `p_min`.
///
/// `applicable` is false on graphs of maximum degree 1, where the degree
/// factor no longer dominates the per-edge normalisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PminBound {
    pub value: f64,
    pub applicable: bool,
}

/// `1 / (Δ·m·r′·κ²)` for all-cosine instances.
pub fn pmin_bound_cosine(instance: &NetworkInstance) -> Result<PminBound> {
    let costs = instance.cyclic_costs()?;
    let mut harmonics = 0;
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for (e, f) in costs.iter().enumerate() {
        match f.kind() {
            CostKind::Cosine { weights } => {
                harmonics = harmonics.max(weights.len());
                for &w in weights {
                    lo = lo.min(w);
                    hi = hi.max(w);
                }
            }
            _ => return Err(Error::DomainMismatch { expected: "cosine cost".into(), found: format!("other cost on edge {e}") }),
        }
    }
    if costs.is_empty() {
        return Err(Error::NoModes);
    }
    let kappa = hi / lo;
    let delta = instance.graph().max_degree();
    let value = 1.0 / (delta as f64 * costs.len() as f64 * harmonics as f64 * kappa * kappa);
    Ok(PminBound { value, applicable: delta >= 2 })
}

/// `1 / (Δ·m·r′·r′⁴)` for instances whose edges are all truncated
/// piecewise-linear costs.
pub fn pmin_bound_pwl(instance: &NetworkInstance) -> Result<PminBound> {
    let costs = instance.cyclic_costs()?;
    let mut harmonics = 0;
    for (e, f) in costs.iter().enumerate() {
        match f.kind() {
            CostKind::Pwl { harmonics: Some(h), .. } => harmonics = harmonics.max(*h),
            _ => {
                return Err(Error::DomainMismatch {
                    expected: "truncated piecewise-linear cost".into(),
                    found: format!("other cost on edge {e}"),
                })
            }
        }
    }
    if costs.is_empty() {
        return Err(Error::NoModes);
    }
    let r = harmonics as f64;
    let delta = instance.graph().max_degree();
    let value = 1.0 / (delta as f64 * costs.len() as f64 * r * r.powi(4));
    Ok(PminBound { value, applicable: delta >= 2 })
}

/// Phase scaling for the linearised sampler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearisationParams {
    pub p: f64,
    pub k: f64,
}

/// `P = (m·r)²·n`, `K = P·m·max_e sup|f_e|`, with `r` the largest edge
/// sparsity (DC included).
pub fn linearisation_params(instance: &NetworkInstance) -> Result<LinearisationParams> {
    let spectra = instance_spectra(instance)?;
    let costs = instance.cyclic_costs()?;
    let m = instance.edge_count() as f64;
    let r = spectra.iter().map(EdgeSpectrum::sparsity).max().unwrap_or(0) as f64;
    let n = instance.node_count() as f64;
    let p = ((m * r).powi(2) * n).max(1.0);
    let sup = costs.iter().map(|f| f.sup_norm()).fold(0.0, f64::max);
    Ok(LinearisationParams { p, k: p * m * sup })
}

/// `[{edge, modes: [{k, re, im}]}]`.
pub fn spectrum_json(spectra: &[EdgeSpectrum]) -> String {
    let doc: Vec<_> = spectra
        .iter()
        .map(|s| {
            let modes: Vec<_> = s.coeffs.iter().map(|(k, z)| json!({"k": k, "re": z.re, "im": z.im})).collect();
            json!({"edge": s.edge, "modes": modes})
        })
        .collect();
    serde_json::to_string_pretty(&doc).expect("finite spectrum")
}
