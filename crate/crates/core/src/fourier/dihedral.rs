use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::DihedralElement;

type Mat2 = [[Complex64; 2]; 2];

/// One-dimensional irreps of `D_C`, given by `(χ(r), χ(s))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneDimIrrep {
    Trivial,
    /// `χ(r) = 1, χ(s) = −1`.
    Sign,
    /// `χ(r) = −1, χ(s) = 1`; even `C` only.
    AltRotation,
    /// `χ(r) = −1, χ(s) = −1`; even `C` only.
    AltBoth,
}

impl OneDimIrrep {
    fn value(self, g: DihedralElement) -> f64 {
        let (r, s) = match self {
            OneDimIrrep::Trivial => (1.0, 1.0),
            OneDimIrrep::Sign => (1.0, -1.0),
            OneDimIrrep::AltRotation => (-1.0, 1.0),
            OneDimIrrep::AltBoth => (-1.0, -1.0),
        };
        let rot: f64 = if g.rotation.is_multiple_of(2) { 1.0 } else { r };
        rot * if g.reflection { s } else { 1.0 }
    }

    fn all(cycle: usize) -> Vec<OneDimIrrep> {
        let mut out = vec![OneDimIrrep::Trivial, OneDimIrrep::Sign];
        if cycle.is_multiple_of(2) {
            out.extend([OneDimIrrep::AltRotation, OneDimIrrep::AltBoth]);
        }
        out
    }
}

/// `ρ_h(r^a s^x) = diag(ω^{ha}, ω^{−ha})·[[0,1],[1,0]]^x`.
fn two_dim(h: usize, g: DihedralElement, cycle: usize) -> Mat2 {
    let angle = 2.0 * PI * ((h * g.rotation) % cycle) as f64 / cycle as f64;
    let (p, q) = (Complex64::from_polar(1.0, angle), Complex64::from_polar(1.0, -angle));
    let z = Complex64::new(0.0, 0.0);
    if g.reflection {
        [[z, p], [q, z]]
    } else {
        [[p, z], [z, q]]
    }
}

/// Fourier coefficients of a function on `D_C`, one per irrep.
#[derive(Debug, Clone, PartialEq)]
pub struct DihedralSpectrum {
    pub cycle: usize,
    pub one_dim: Vec<(OneDimIrrep, Complex64)>,
    /// `(h, f̂(ρ_h))` for `h = 1..⌈C/2⌉−1`.
    pub two_dim: Vec<(usize, Mat2)>,
}

impl DihedralSpectrum {
    /// `f(g) = Σ_ρ d_ρ·tr(f̂(ρ)·ρ(g))` over all `2C` elements.
    pub fn reconstruct(&self) -> Vec<f64> {
        let c = self.cycle;
        (0..2 * c)
            .map(|idx| {
                let g = DihedralElement::from_index(idx, c);
                let mut total: Complex64 = self.one_dim.iter().map(|&(irrep, z)| z * irrep.value(g)).sum();
                for &(h, ref m) in &self.two_dim {
                    let rho = two_dim(h, g, c);
                    let mut tr = Complex64::new(0.0, 0.0);
                    for a in 0..2 {
                        for b in 0..2 {
                            tr += m[a][b] * rho[b][a];
                        }
                    }
                    total += 2.0 * tr;
                }
                total.re
            })
            .collect()
    }

    /// `d_ρ·‖f̂(ρ)‖_F²` per irrep: one-dimensional entries first, then `h = 1, 2, …`.
    pub fn energies(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.one_dim.iter().map(|(_, z)| z.norm_sqr()).collect();
        out.extend(self.two_dim.iter().map(|(_, m)| 2.0 * m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>()));
        out
    }
}

/// `f̂(ρ) = (1/2C) Σ_g f(g)·ρ(g)†` on a `2C`-entry table (rotations, then reflections).
pub fn dihedral_dft(cycle: usize, values: &[f64]) -> Result<DihedralSpectrum> {
    if cycle < 2 {
        return Err(Error::InvalidCost(format!("cycle length {cycle} must be at least 2")));
    }
    if values.len() != 2 * cycle {
        return Err(Error::InvalidCost(format!("dihedral table needs {} entries, got {}", 2 * cycle, values.len())));
    }
    let order = 2.0 * cycle as f64;
    let elements: Vec<DihedralElement> = (0..2 * cycle).map(|i| DihedralElement::from_index(i, cycle)).collect();
    let one_dim = OneDimIrrep::all(cycle)
        .into_iter()
        .map(|irrep| {
            let s: f64 = elements.iter().zip(values).map(|(&g, &f)| f * irrep.value(g)).sum();
            (irrep, Complex64::new(s / order, 0.0))
        })
        .collect();
    let two_dim = (1..cycle.div_ceil(2))
        .map(|h| {
            let mut acc = [[Complex64::new(0.0, 0.0); 2]; 2];
            for (&g, &f) in elements.iter().zip(values) {
                let rho = two_dim(h, g, cycle);
                for a in 0..2 {
                    for b in 0..2 {
                        acc[a][b] += f * rho[b][a].conj();
                    }
                }
            }
            for row in &mut acc {
                for z in row.iter_mut() {
                    *z /= order;
                }
            }
            (h, acc)
        })
        .collect();
    Ok(DihedralSpectrum { cycle, one_dim, two_dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreps_are_homomorphisms() {
        for c in [3usize, 4, 5, 6] {
            let all: Vec<_> = (0..2 * c).map(|i| DihedralElement::from_index(i, c)).collect();
            for &a in &all {
                for &b in &all {
                    let ab = a.compose(b, c);
                    for irrep in OneDimIrrep::all(c) {
                        assert_eq!(irrep.value(ab), irrep.value(a) * irrep.value(b));
                    }
                    for h in 1..c.div_ceil(2) {
                        let (ra, rb, rab) = (two_dim(h, a, c), two_dim(h, b, c), two_dim(h, ab, c));
                        for i in 0..2 {
                            for j in 0..2 {
                                let prod = ra[i][0] * rb[0][j] + ra[i][1] * rb[1][j];
                                assert!((prod - rab[i][j]).norm() < 1e-12);
                            }
                        }
                    }
                }
            }
            // Σ d² = |D_C|
            let one = OneDimIrrep::all(c).len();
            assert_eq!(one + 4 * (c.div_ceil(2) - 1), 2 * c);
        }
    }

    #[test]
    fn constant_lives_in_trivial() {
        let s = dihedral_dft(4, &[2.5; 8]).unwrap();
        let e = s.energies();
        assert!((s.one_dim[0].1.re - 2.5).abs() < 1e-12);
        assert!(e[1..].iter().all(|&x| x < 1e-24));
    }

    #[test]
    fn rotation_cosine_lives_in_first_two_dim_irrep() {
        let c = 8;
        let mut table = vec![0.0; 2 * c];
        for (a, v) in table.iter_mut().take(c).enumerate() {
            *v = (2.0 * PI * a as f64 / c as f64).cos();
        }
        let s = dihedral_dft(c, &table).unwrap();
        let e = s.energies();
        let h1 = s.one_dim.len();
        for (idx, &x) in e.iter().enumerate() {
            if idx == h1 {
                assert!(x > 1e-3);
            } else {
                assert!(x < 1e-20, "irrep {idx} energy {x}");
            }
        }
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert!(dihedral_dft(4, &[0.0; 7]).is_err());
    }
}
