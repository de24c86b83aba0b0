//! Per-edge cost functions on `Z_C`.
//!
//! Every variant is materialised into an exact length-`C` table at
//! construction; evaluation and spectra work from that table.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fourier::dense_dft;

/// `cos(2π·m/c)` with the quarter-period points returned exactly.
pub(crate) fn unit_cos(m: usize, c: usize) -> f64 {
    let m = m % c;
    if m == 0 {
        1.0
    } else if 2 * m == c {
        -1.0
    } else if 4 * m == c || 4 * m == 3 * c {
        0.0
    } else {
        (2.0 * PI * m as f64 / c as f64).cos()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CostKind {
    Table,
    /// `f(x) = Σ_ℓ w_ℓ · cos(2πℓx/C)` for `ℓ = 1..=weights.len()`.
    Cosine { weights: Vec<f64> },
    /// Periodic linear interpolation through `(position, value)` breakpoints,
    /// optionally truncated to harmonics `1..=h` (DC dropped).
    Pwl { breakpoints: Vec<(f64, f64)>, harmonics: Option<usize> },
}

/// Input to [`make_cost`].
#[derive(Debug, Clone, PartialEq)]
pub enum CostSpec {
    Table(Vec<f64>),
    Cosine { cycle: usize, weights: Vec<f64> },
    Pwl { cycle: usize, breakpoints: Vec<(f64, f64)>, harmonics: Option<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostFunction {
    kind: CostKind,
    table: Vec<f64>,
}

pub fn make_cost(spec: CostSpec) -> Result<CostFunction> {
    match spec {
        CostSpec::Table(values) => CostFunction::table(values),
        CostSpec::Cosine { cycle, weights } => CostFunction::cosine(cycle, weights),
        CostSpec::Pwl { cycle, breakpoints, harmonics } => match harmonics {
            None => CostFunction::pwl(cycle, breakpoints),
            Some(h) => CostFunction::pwl_truncated(cycle, breakpoints, h),
        },
    }
}

fn check_cycle(cycle: usize) -> Result<()> {
    if cycle < 2 {
        return Err(Error::InvalidCost(format!("cycle length {cycle} must be at least 2")));
    }
    Ok(())
}

impl CostFunction {
    pub fn table(values: Vec<f64>) -> Result<Self> {
        check_cycle(values.len())?;
        if let Some(x) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidCost(format!("table entry {x} is not finite")));
        }
        Ok(CostFunction { kind: CostKind::Table, table: values })
    }

    pub fn cosine(cycle: usize, weights: Vec<f64>) -> Result<Self> {
        check_cycle(cycle)?;
        if weights.is_empty() {
            return Err(Error::InvalidCost("cosine cost needs at least one harmonic".into()));
        }
        if let Some(l) = weights.iter().position(|&w| !(w.is_finite() && w > 0.0)) {
            return Err(Error::InvalidCost(format!(
                "cosine weight for harmonic {} must be positive, got {}",
                l + 1,
                weights[l]
            )));
        }
        let table = (0..cycle)
            .map(|x| {
                weights
                    .iter()
                    .enumerate()
                    .map(|(l, w)| w * unit_cos((l + 1) * x, cycle))
                    .sum()
            })
            .collect();
        Ok(CostFunction { kind: CostKind::Cosine { weights }, table })
    }

    pub fn pwl(cycle: usize, breakpoints: Vec<(f64, f64)>) -> Result<Self> {
        check_cycle(cycle)?;
        let table = pwl_table(cycle, &breakpoints)?;
        Ok(CostFunction { kind: CostKind::Pwl { breakpoints, harmonics: None }, table })
    }

    /// Piecewise-linear cost keeping only harmonics `1..=harmonics` of its
    /// DFT (the constant term is dropped as well).
    pub fn pwl_truncated(cycle: usize, breakpoints: Vec<(f64, f64)>, harmonics: usize) -> Result<Self> {
        check_cycle(cycle)?;
        if harmonics == 0 || 2 * harmonics >= cycle {
            return Err(Error::InvalidCost(format!(
                "harmonic count {harmonics} must lie in 1..{}",
                cycle.div_ceil(2)
            )));
        }
        let raw = pwl_table(cycle, &breakpoints)?;
        let spectrum = dense_dft(&raw);
        let table = (0..cycle)
            .map(|x| {
                (1..=harmonics)
                    .map(|l| {
                        // f̂(l)ω^{lx} + f̂(C−l)ω^{−lx} = 2·Re(f̂(l)ω^{lx}) for real f
                        let c = spectrum[l];
                        let angle = 2.0 * PI * ((l * x) % cycle) as f64 / cycle as f64;
                        2.0 * (c.re * angle.cos() - c.im * angle.sin())
                    })
                    .sum()
            })
            .collect();
        Ok(CostFunction { kind: CostKind::Pwl { breakpoints, harmonics: Some(harmonics) }, table })
    }

    pub fn kind(&self) -> &CostKind {
        &self.kind
    }

    pub fn cycle(&self) -> usize {
        self.table.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.table
    }

    pub fn eval(&self, d: usize) -> f64 {
        self.table[d % self.table.len()]
    }

    pub fn sup_norm(&self) -> f64 {
        self.table.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn min_value(&self) -> f64 {
        self.table.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.table.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Same function with the argument negated: `g(d) = f(−d mod C)`.
    pub fn reflected(&self) -> CostFunction {
        let c = self.cycle();
        let table = (0..c).map(|d| self.table[(c - d) % c]).collect();
        CostFunction { kind: CostKind::Table, table }
    }

    /// Same function translated: `g(d) = f(d − shift mod C)`.
    pub fn shifted(&self, shift: usize) -> CostFunction {
        let c = self.cycle();
        let table = (0..c).map(|d| self.table[(d + c - shift % c) % c]).collect();
        CostFunction { kind: CostKind::Table, table }
    }
}

fn pwl_table(cycle: usize, breakpoints: &[(f64, f64)]) -> Result<Vec<f64>> {
    if breakpoints.len() < 2 {
        return Err(Error::InvalidCost("piecewise-linear cost needs at least 2 breakpoints".into()));
    }
    let c = cycle as f64;
    for (idx, &(pos, val)) in breakpoints.iter().enumerate() {
        if !(pos.is_finite() && val.is_finite()) || pos < 0.0 || pos >= c {
            return Err(Error::InvalidCost(format!(
                "breakpoint {idx} ({pos}, {val}) must have a finite position in [0, {cycle})"
            )));
        }
    }
    if let Some(w) = breakpoints.windows(2).position(|w| w[0].0 >= w[1].0) {
        return Err(Error::InvalidCost(format!(
            "breakpoints must be strictly increasing in position (at index {})",
            w + 1
        )));
    }
    let len = breakpoints.len();
    let table = (0..cycle)
        .map(|x| {
            let x = x as f64;
            // segment [left, right) containing x, wrapping around the period
            let next = breakpoints.iter().position(|&(p, _)| p > x);
            let (left, right) = match next {
                Some(0) => ((breakpoints[len - 1].0 - c, breakpoints[len - 1].1), breakpoints[0]),
                Some(i) => (breakpoints[i - 1], breakpoints[i]),
                None => (breakpoints[len - 1], (breakpoints[0].0 + c, breakpoints[0].1)),
            };
            let t = (x - left.0) / (right.0 - left.0);
            left.1 + t * (right.1 - left.1)
        })
        .collect();
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn cosine_table_matches_formula() {
        let f = make_cost(CostSpec::Cosine { cycle: 8, weights: vec![1.0] }).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(close(f.values(), &[1.0, h, 0.0, -h, -1.0, -h, 0.0, h]));
    }

    #[test]
    fn pwl_interpolates_periodically() {
        let f = make_cost(CostSpec::Pwl { cycle: 4, breakpoints: vec![(0.0, 0.0), (2.0, 1.0)], harmonics: None })
            .unwrap();
        assert!(close(f.values(), &[0.0, 0.5, 1.0, 0.5]));
        // first breakpoint away from zero wraps backwards
        let g = CostFunction::pwl(4, vec![(1.0, 2.0), (3.0, 0.0)]).unwrap();
        assert!(close(g.values(), &[1.0, 2.0, 1.0, 0.0]));
    }

    #[test]
    fn table_is_identity() {
        let f = make_cost(CostSpec::Table(vec![1.0, -1.0])).unwrap();
        assert_eq!(f.values(), &[1.0, -1.0]);
    }

    #[test]
    fn constructor_errors() {
        assert!(CostFunction::cosine(8, vec![1.0, 0.0]).is_err());
        assert!(CostFunction::cosine(8, vec![-0.5]).is_err());
        assert!(CostFunction::pwl(4, vec![(2.0, 0.0), (1.0, 1.0)]).is_err());
        assert!(CostFunction::pwl(4, vec![(0.0, 0.0)]).is_err());
        assert!(CostFunction::pwl(4, vec![(0.0, 0.0), (4.0, 1.0)]).is_err());
        assert!(CostFunction::table(vec![1.0]).is_err());
        assert!(CostFunction::table(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn truncated_pwl_keeps_requested_harmonics() {
        let f = CostFunction::pwl_truncated(16, vec![(0.0, 1.0), (8.0, 0.0)], 1).unwrap();
        let spec = dense_dft(f.values());
        for (k, c) in spec.iter().enumerate() {
            if k == 1 || k == 15 {
                assert!(c.norm() > 1e-3);
            } else {
                assert!(c.norm() < 1e-12, "k={k} {c}");
            }
        }
    }

    #[test]
    fn reflection_and_shift() {
        let f = CostFunction::table(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(f.reflected().values(), &[0.0, 3.0, 2.0, 1.0]);
        assert_eq!(f.shifted(1).values(), &[3.0, 0.0, 1.0, 2.0]);
    }
}
