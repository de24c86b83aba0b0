use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::bignum::{ceil_ln, grover_ceiling, sig_figs, sig_figs_int, Sci};

/// Resource projection for one `(n, m, r, C)` configuration. All counts exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateReport {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    pub cycle: u64,
    /// Qubits per register, `⌈log₂ C⌉`.
    pub q: u64,
    pub state_space: BigUint,
    pub per_repetition: BigUint,
    pub repetitions: BigUint,
    pub fourier_total: BigUint,
    pub grover_per_iteration: BigUint,
    pub grover_iterations: BigUint,
    pub grover_total: BigUint,
}

pub fn ceil_log2(c: u64) -> u64 {
    assert!(c >= 1);
    (64 - (c - 1).leading_zeros()) as u64
}

/// `G = (mr+n)·q²` per repetition, `T = max(1, mr·n·⌈ln mr⌉)` repetitions,
/// against `m·q²` gates for each of `⌈π√(C^n)/4⌉` Grover iterations.
pub fn gate_counts(n: u64, m: u64, r: u64, cycle: u64) -> GateReport {
    assert!(n >= 1 && m >= 1 && r >= 1 && cycle >= 2, "parameters must be positive and C ≥ 2");
    let q = ceil_log2(cycle);
    let q2 = BigUint::from(q * q);
    let mr = BigUint::from(m) * r;
    let per_repetition = (&mr + n) * &q2;
    let repetitions = (&mr * n * ceil_ln(m * r)).max(BigUint::one());
    let state_space = BigUint::from(cycle).pow(n as u32);
    let grover_per_iteration = BigUint::from(m) * &q2;
    let grover_iterations = grover_ceiling(&state_space);
    GateReport {
        n,
        m,
        r,
        cycle,
        q,
        fourier_total: &per_repetition * &repetitions,
        grover_total: &grover_per_iteration * &grover_iterations,
        state_space,
        per_repetition,
        repetitions,
        grover_per_iteration,
        grover_iterations,
    }
}

impl GateReport {
    /// Grover total over Fourier total, divided exactly before rounding.
    pub fn speedup(&self, sig: u32) -> Sci {
        sig_figs(&self.grover_total, &self.fourier_total, sig)
    }

    pub fn row(&self) -> GateRow {
        GateRow {
            n: self.n,
            m: self.m,
            r: self.r,
            cycle: self.cycle,
            state_space: sig_figs_int(&self.state_space, 2).to_string(),
            fourier_nc: sig_figs_int(&self.fourier_total, 2).to_string(),
            grover: sig_figs_int(&self.grover_total, 2).to_string(),
            speedup: self.speedup(2).to_string(),
            fourier_exact: self.fourier_total.to_string(),
            grover_exact: self.grover_total.to_string(),
        }
    }
}

/// Printable projection, two significant figures plus exact totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateRow {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    #[serde(rename = "C")]
    pub cycle: u64,
    #[serde(rename = "C^n")]
    pub state_space: String,
    pub fourier_nc: String,
    pub grover: String,
    pub speedup: String,
    pub fourier_exact: String,
    pub grover_exact: String,
}

/// `(4mr+n)·q²` gates per repetition over `D_C`.
pub fn dihedral_gate_counts(n: u64, m: u64, r: u64, cycle: u64) -> BigUint {
    let q = ceil_log2(cycle);
    (BigUint::from(4 * m) * r + n) * (q * q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversaryCount {
    /// `⌈C^n/2⌉` classical queries.
    pub classical: BigUint,
    pub grover: BigUint,
}

pub fn adversary_query_count(n: u64, cycle: u64) -> AdversaryCount {
    let space = BigUint::from(cycle).pow(n as u32);
    AdversaryCount { classical: (&space + 1u32) / 2u32, grover: grover_ceiling(&space) }
}
