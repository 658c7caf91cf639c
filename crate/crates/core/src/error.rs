use thiserror::Error;

/// Which structure map failed axiom validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomMap {
    Sigma,
    Delta,
}

impl std::fmt::Display for AxiomMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomMap::Sigma => f.write_str("sigma"),
            AxiomMap::Delta => f.write_str("delta"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{map} violates {law} at witness ({a}, {b})")]
    AxiomViolation {
        map: AxiomMap,
        law: &'static str,
        a: String,
        b: String,
    },
    #[error("incompatible ring description: {0}")]
    IncompatibleSpec(String),
    #[error("sigma is not an automorphism of this ring")]
    NoInverse,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different ring contexts")]
    CtxMismatch,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("operation requires a commutative coefficient ring")]
    NonCommutativeRing,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("resultant is zero")]
    ZeroResultant,
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("degree requirement not met: {0}")]
    DegreeTooSmall(String),
    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
