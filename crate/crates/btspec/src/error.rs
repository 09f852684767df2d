use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside working range: {0}")]
    Domain(String),
    #[error("result overflows f64: {0}")]
    Overflow(String),
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("derivative magnitude {0:e} below threshold (stationary point)")]
    Stationary(f64),
    #[error("roots for indices {0} and {1} coincide")]
    BranchCollision(usize, usize),
    #[error("bilinear norm {0:e} vanishes; eigenvalue may not be simple")]
    JordanBlock(f64),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("truncation criterion violated: h^2 mu_M/(|area|/4pi) = {ratio:.3} < {required}")]
    Truncation { ratio: f64, required: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
