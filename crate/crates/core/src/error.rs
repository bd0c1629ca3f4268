//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cap exceeded for {what}: requested {requested}, limit {limit}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    #[error("cochain table is not normalized: nonzero value on a tuple containing the identity")]
    NotNormalized,
    #[error("group mismatch: operands are defined over different groups")]
    GroupMismatch,
    #[error("cochain shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("element coordinates out of range for the group")]
    InvalidElement,
    #[error("images do not define a homomorphism: order of image {index} does not divide the factor order")]
    NotAHomomorphism { index: usize },
    #[error("the associator does not satisfy the pentagon equation")]
    PentagonViolated,
    #[error("the pair does not satisfy the hexagon equations")]
    HexagonViolated,
    #[error("the map is not an abelian 3-cocycle")]
    NotACocycle,
    #[error("the map is not a quadratic form")]
    NotQuadratic,
    #[error("the table is not biadditive")]
    NotBiadditive,
    #[error("modulus must be even")]
    OddModulus,
    #[error("multiplier must be odd")]
    EvenMultiplier,
    #[error("eta does not solve the vertical coboundary equation for this associator")]
    EtaMismatch,
    #[error("theory is not modular: the bilinear form is degenerate")]
    NotModular,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("multiplier {u} does not satisfy the residue condition of the label")]
    BadMultiplier { u: u64 },
    #[error("epsilon {epsilon} is not admissible for this label")]
    BadEpsilon { epsilon: i64 },
    #[error("no orthogonal splitting found for a modular input (this is a bug)")]
    DecompositionFailed,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
