use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("point {0} is singular on the curve")]
    SingularPoint(String),
    #[error("line is a component of the curve")]
    LineComponent,
    #[error("unsplit residual factor of degree {degree} left by root extraction")]
    ResidualFactor { degree: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("degree error: expected {expected}, found {found}")]
    Degree { expected: String, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("registry integrity failure: {0}")]
    Registry(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
