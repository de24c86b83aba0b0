use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: String, found: String },

    #[error("node index {node} out of range for {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid cost function: {0}")]
    InvalidCost(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge { what: &'static str, size: f64, limit: f64 },

    #[error("instance has no non-zero Fourier mode")]
    NoModes,

    #[error("sample count must be positive")]
    ZeroSamples,

    #[error("corrupt measurement batch: {0}")]
    CorruptBatch(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("instance is frustrated ({frustrated_cycles} of {cycle_rank} basis cycles carry non-zero holonomy); use the hybrid solver")]
    Frustrated { frustrated_cycles: usize, cycle_rank: usize },

    #[error("edge ({i}, {j}) has ambiguous offset difference {residues:?}")]
    Ambiguous { i: usize, j: usize, residues: Vec<usize> },

    #[error("mode collection incomplete after {retries} retries: tree edges {missing:?} never observed")]
    IncompleteRecovery { missing: Vec<(usize, usize)>, retries: usize },

    #[error("partition sizes differ: {0} vs {1}")]
    PartitionMismatch(usize, usize),

    #[error("class function has an all-zero spectrum")]
    ZeroSpectrum,

    #[error("sampling budget of {budget} draws exhausted; unobserved mass {missing_mass:.3e}")]
    BudgetExhausted { budget: usize, missing_mass: f64 },

    #[error("invalid minimiser hint: {0}")]
    InvalidHint(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for violations of a domain contract (frustration, size guards)
    /// rather than malformed input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::Frustrated { .. }
                | Error::TooLarge { .. }
                | Error::Ambiguous { .. }
                | Error::IncompleteRecovery { .. }
                | Error::BudgetExhausted { .. }
        )
    }
}
