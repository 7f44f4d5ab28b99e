use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate q-number base {0}")]
    DegenerateBase(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("exponent {0} is not a half-integer multiple of q")]
    NonIntegralExponent(String),
    #[error("rank must be at least 1")]
    RankZero,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("simple root index {0} out of range")]
    InvalidIndex(usize),
    #[error("weight {0} is not in the lattice {1}")]
    NotInLattice(String, &'static str),
    #[error("isotropic weight {0}")]
    IsotropicWeight(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("element is not homogeneous for the {0} gradation")]
    NotHomogeneous(&'static str),
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no central element in the window ({0})")]
    NoSolution(String),
    #[error("central element not unique in the window: kernel dimension {0}")]
    NonUnique(usize),
    #[error("element does not act by a scalar: {0}")]
    NonScalar(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource bound exceeded: {0}")]
    ResourceLimit(String),
}
