use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("bracket table violates {rule} at ({left}, {right}, {result})")]
    BracketViolation { rule: &'static str, left: String, right: String, result: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("r-matrix violates {0}")]
    InvalidRMatrix(String),
    #[error("basis layout is not four even generators followed by four odd ones")]
    LayoutMismatch,
    #[error("automorphism parameters are singular: ad - bc = 0")]
    SingularParams,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("basis change mixes even and odd generators")]
    OddBasisChange,
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown template `{0}`")]
    UnknownTemplate(String),
    #[error("unknown witness `{0}`")]
    UnknownWitness(String),
    #[error("expression error: {0}")]
    Expr(String),
    #[error("division by zero while evaluating `{0}`")]
    DivisionByZero(String),
    #[error("unbound parameter `{0}`")]
    Unbound(String),
    #[error("parameter `{name}` of `{template}` is binary and must be 0 or 1")]
    NonBinary { template: String, name: String },
    #[error("no sample landed in the domain of `{0}`")]
    EmptyDomain(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
