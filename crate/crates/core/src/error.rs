use thiserror::Error;

/// Everything that can go wrong in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("at least two generators are required, got {0}")]
    TooFewGenerators(usize),
    #[error("generator at position {index} is not positive ({value})")]
    NonPositive { index: usize, value: i128 },
    #[error("generators are not coprime (gcd = {gcd})")]
    NotCoprime { gcd: u64 },
    #[error("generators are not pairwise coprime (gcd(a_{i}, a_{j}) = {gcd})", i = .i + 1, j = .j + 1)]
    NotPairwiseCoprime { i: usize, j: usize, gcd: u64 },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),
    #[error("more than {cap} representations")]
    CapExceeded { cap: u64 },
    #[error("search ceiling {ceiling} reached for residue {residue} mod {modulus}")]
    SearchCeilingExceeded {
        ceiling: u64,
        residue: u64,
        modulus: u64,
    },
    #[error("t = {t} exceeds the configured maximum {max}")]
    TLimitExceeded { t: u32, max: u32 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl FrobError {
    /// True for errors caused by the caller's input, as opposed to resource limits.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            FrobError::InvalidInput(_)
                | FrobError::TooFewGenerators(_)
                | FrobError::NonPositive { .. }
                | FrobError::NotCoprime { .. }
                | FrobError::NotPairwiseCoprime { .. }
                | FrobError::TLimitExceeded { .. }
        )
    }

    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            FrobError::Overflow(_)
                | FrobError::ResourceExceeded(_)
                | FrobError::CapExceeded { .. }
                | FrobError::SearchCeilingExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, FrobError>;
