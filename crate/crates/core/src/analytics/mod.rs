//! Resource analytics, the MAX-CUT reduction, seeded instance families and
//! the multi-topology validation harness.

mod bignum;
mod gates;
mod maxcut;
pub mod random;
mod validation;

pub use bignum::{ceil_ln, grover_ceiling, pi_scaled, sig_figs, sig_figs_int, Sci};
pub use gates::{
    adversary_query_count, ceil_log2, dihedral_gate_counts, gate_counts, AdversaryCount, GateReport, GateRow,
};
pub use maxcut::{cut_value, maxcut_reduce};
pub use validation::{validation_suite, ValidationRow, VALIDATION_CYCLE, VALIDATION_TRIALS, WEIGHT_RANGE, PWL_RATIO_RANGE};
