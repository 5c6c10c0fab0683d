use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The ring has no proper zero-divisors, so the graph is not defined.
    #[error("domain ring — Γ_reg undefined for domains (modulus {0})")]
    DomainRing(u64),

    /// Some local factor has infinitely many ideals.
    #[error("infinite ideal lattice in factor {factor}: only finite Artinian rings are supported")]
    InfiniteLattice { factor: usize },

    #[error("invalid profile {input:?}: {reason}")]
    InvalidProfile { input: String, reason: String },

    #[error("invalid local factor: {0}")]
    InvalidFactor(String),

    #[error("invalid ideal vector: {0}")]
    InvalidIdeal(String),

    #[error("ideal vectors do not belong to the same ring (expected {expected} factors, got {got})")]
    SpecMismatch { expected: usize, got: usize },

    #[error("graph too large: {vertices} vertices exceeds the limit of {limit}")]
    GraphTooLarge { vertices: u128, limit: usize },

    #[error("{divisor} is not a nontrivial divisor of {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },

    #[error("expected two distinct ideals, got ({0}) twice")]
    SameIdeal(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
