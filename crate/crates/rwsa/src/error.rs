use thiserror::Error;

#[derive(Error, Debug)]
pub enum RwsaError {
    #[error("problem index mismatch: {0} vs {1}")]
    IndexMismatch(usize, usize),

    #[error("variable index {0} out of range 1..={1}")]
    VarOutOfRange(usize, usize),

    #[error("time derivative overflows alpha_{0}: raise the problem index n")]
    DerivativeOverflow(usize),

    #[error("invalid problem index n = {0}; need n >= 1")]
    BadIndex(i64),

    #[error(
        "homogeneity violated at order -2-{m}: term from (j={j}, k={k}, l1={l1}, l2={l2}) has degree {got}, expected {want}"
    )]
    NotHomogeneous {
        m: usize,
        j: usize,
        k: usize,
        l1: usize,
        l2: usize,
        got: i64,
        want: i64,
    },

    #[error("expression is not homogeneous: found degrees {0} and {1}")]
    MixedDegrees(i64, i64),

    #[error("trace has a nonzero imaginary part after parity filtering")]
    NonRealTrace,

    #[error("eta-dependence did not cancel for monomial {monomial}: residual {residual}")]
    EtaNotConstant { monomial: String, residual: String },

    #[error("residual power of pi ({0}) in heat coefficient; rationality violated")]
    ResidualPi(i64),

    #[error("division by zero while evaluating: {0}")]
    EvalDivisionByZero(&'static str),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("oracle deviation {dev:.3e} exceeds tolerance {tol:.3e} at point {point}")]
    OracleMismatch { dev: f64, tol: f64, point: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, RwsaError>;
