use thiserror::Error;

pub type Result<T> = std::result::Result<T, LmeError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LmeError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty list")]
    EmptyList,

    #[error("matrix is singular")]
    Singular,

    #[error("index {0} is larger than 1; group inverse does not exist")]
    IndexTooLarge(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("members {0} and {1} do not commute")]
    NotCommuting(usize, usize),

    #[error("member {0} is not diagonalizable")]
    NotDiagonalizable(usize),

    #[error("refinement of block starting at {block_start} failed for member {member}")]
    RefinementFailure { member: usize, block_start: usize },

    #[error("matrix does not diagonalize member {0}")]
    NotADiagonalizer(usize),

    #[error("no permutation relates the two induced sequences")]
    NoMatchingPermutation,

    #[error("eigenvalue intersection for block {block} has {found} terms, expected {expected}")]
    IntersectionAmbiguous {
        block: usize,
        found: usize,
        expected: usize,
    },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Box<LmeError>),

    #[error("parameter A is not normal")]
    NotNormal,

    #[error("right-hand side is not Hermitian")]
    NotHermitianRhs,

    #[error("equation is inconsistent")]
    InconsistentInput,

    #[error("Schur iteration did not converge")]
    NoConvergence,

    #[error("oracle mismatch: {0}")]
    Mismatch(String),
}

impl LmeError {
    pub(crate) fn hypothesis(err: LmeError) -> LmeError {
        match err {
            e @ LmeError::HypothesisViolated(_) => e,
            e => LmeError::HypothesisViolated(Box::new(e)),
        }
    }
}
