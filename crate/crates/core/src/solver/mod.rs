//! Offset reconstruction from sampled modes, frustration analysis and exact solvers.

mod congruence;
mod exact;
mod frustration;
mod pipeline;
mod tree;

pub use congruence::{congruences_from_modes, crt_combine, mod_inverse, residue_set, solve_linear_congruence, Congruence};
pub use exact::{brute_force_solve, hybrid_solve, Solution, BRUTE_FORCE_LIMIT, HYBRID_LIMIT};
pub use frustration::{
    detect_frustration, edge_minimizers, frustration_gap_bound, FrustrationStatus, HolonomyReport, SELECTION_LIMIT,
};
pub use pipeline::{end_to_end_solve, RunReport, DEFAULT_DELTA, MAX_RETRIES};
pub use tree::{solve_tree, tree_minimizer_solve};
