//! Sparse Fourier network coordination.
//!
//! A network of `n` nodes picks one group element per node; each edge pays a
//! cost that depends only on the relative element of its endpoints. Over the
//! cyclic group `Z_C` the global cost factorises into at most `m·r` Fourier
//! modes, one anti-diagonal per edge. This crate computes those spectra,
//! simulates the measurement statistics of a phase-oracle/QFT sampler,
//! reconstructs offsets from sampled modes, analyses frustration, and carries
//! the symmetric-group (`S_k`) class-function machinery alongside gate and
//! query-count analytics.
//!
//! Module map:
//!
//! - [`model`]: graphs, cost families, instances, exact cost evaluation, JSON I/O.
//! - [`fourier`]: edge DFTs, global modes, the dense oracle, `p_min` and its bounds,
//!   dihedral spectra.
//! - [`sampler`]: linearised measurement law, seeded sampling, convergence curves.
//! - [`solver`]: congruence decoding, spanning-tree reconstruction, holonomy,
//!   hybrid and brute-force solvers, the end-to-end pipeline.
//! - [`symmetric`]: partitions, characters, class functions, `S_k` sampling and solving,
//!   abelian index, the extremal-class experiment.
//! - [`analytics`]: gate counts, the MAX-CUT reduction, the validation harness.

#![forbid(unsafe_code)]

pub mod analytics;
pub mod error;
pub mod fourier;
pub mod model;
pub mod rng;
pub mod sampler;
pub mod solver;
pub mod symmetric;

pub use error::{Error, Result};
