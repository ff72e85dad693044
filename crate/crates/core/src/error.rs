use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate label `{0}`")]
    Duplicate(String),
    #[error("paths not composable in `{0}`")]
    NotComposable(String),
    #[error("relation `{0}` has a term of length < 2")]
    ShortRelation(String),
    #[error("relation `{0}` mixes paths with different endpoints")]
    NonParallel(String),
    #[error("increase bound or ideal not admissible (no termination below path length {0})")]
    NotAdmissible(usize),
    #[error("representation does not satisfy relation `{0}`")]
    RelationViolated(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operation requires characteristic 0")]
    NeedsCharacteristicZero,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("pair is not tau-rigid")]
    NotTauRigid,
    #[error("pair is not support tau-tilting")]
    NotTauTilting,
    #[error("summand index {index} out of range for {count} summands")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("oracle search space exceeds the ceiling ({0} candidates)")]
    CeilingExceeded(u128),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
