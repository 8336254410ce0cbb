use thiserror::Error;

/// Errors raised anywhere in the summation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// The Toeplitz/Hankel system of the `[n-1, n]` Padé approximant is singular
    /// and no lower-order exact termination reproduces the data.
    #[error("degenerate Padé system at order {order}")]
    DegeneratePade { order: usize },

    /// Simultaneous root iteration did not reach the residual tolerance.
    #[error("root finding failed after {iterations} iterations (residuals {residuals:?})")]
    RootFindingFailure {
        iterations: usize,
        residuals: Vec<f64>,
    },

    /// Two poles of the denominator coincide within the simplicity tolerance.
    #[error("poles {first} and {second} coincide within {separation:e}")]
    MultiplePole {
        first: usize,
        second: usize,
        separation: f64,
    },

    /// An evaluation argument lies on the negative real axis.
    #[error("argument on the branch cut{}: {detail}", .index.map(|j| format!(" (term {j})")).unwrap_or_default())]
    BranchCut {
        index: Option<usize>,
        detail: String,
    },

    /// Double-exponential quadrature ran out of refinement levels.
    #[error(
        "quadrature did not converge after {levels} levels (error estimate {error_estimate:e})"
    )]
    Quadrature { levels: u32, error_estimate: f64 },

    #[error("unsupported degenerate case: {0}")]
    UnsupportedDegenerateCase(String),

    #[error("no sign change for the fit on [{lo}, {hi}]")]
    FitBracket { lo: f64, hi: f64 },

    #[error("no sign change for the root on [{lo}, {hi}]")]
    RootBracket { lo: f64, hi: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable short name, printed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegeneratePade { .. } => "DegeneratePade",
            Error::RootFindingFailure { .. } => "RootFindingFailure",
            Error::MultiplePole { .. } => "MultiplePoleError",
            Error::BranchCut { .. } => "BranchCutError",
            Error::Quadrature { .. } => "QuadratureError",
            Error::UnsupportedDegenerateCase(_) => "UnsupportedDegenerateCase",
            Error::FitBracket { .. } => "FitBracketError",
            Error::RootBracket { .. } => "RootBracketError",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
            Error::Json(_) => "JsonError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
