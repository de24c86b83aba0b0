//! Symmetric-group machinery: partitions, characters, class functions,
//! irrep sampling, the tree solver for permutation networks, query tables,
//! the abelian index and the extremal-class experiment.

mod abelian;
mod characters;
mod class_function;
mod dmpc;
mod ecc;
mod measurement;
mod partition;
mod perm;
mod queries;

pub use abelian::{
    abelian_index, fundamental_ineq_check, max_abelian_order, AbelianIndex, GroupDescriptor, InequalityCheck,
    MAX_ABELIAN_SEARCH_K,
};
pub use characters::{
    character, character_row, class_size, class_sizes, hook_dimension, max_dimension, CharacterTable, RowCache,
    MAX_CHARACTER_K,
};
pub use class_function::{class_dft, composite_cost, hamming_cost, kendall_class_average, ClassFunction, COEFF_EPS};
pub use partition::{factorial, partitions, Partition, MAX_PARTITION_K};
pub use perm::Permutation;
pub use dmpc::{dmpc_solve, DMPC_MEMBER_K, DMPC_SEARCH_BUDGET};
pub use ecc::{distinct_parts_coverage, ecc_experiment, EccStats};
pub use measurement::{label_budget, sk_measurement_distribution, sk_recover_support, SkDistribution};
pub use queries::{crossovers, query_table, QueryPrintRow, QueryRow};
