use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("circuit width must be at least 1")]
    ZeroWidth,

    #[error("qubit {qubit} out of range for width {width}")]
    QubitOutOfRange { qubit: usize, width: usize },

    #[error("gate {kind} repeats qubit {qubit}")]
    DuplicateQubit { kind: &'static str, qubit: usize },

    #[error("MCZ needs at least 2 qubits, got {0}")]
    McZTooSmall(usize),

    #[error("gate {kind} has non-finite angle {angle}")]
    NonFiniteAngle { kind: &'static str, angle: f64 },

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("unknown gate kind {0:?}")]
    UnknownGateKind(String),

    #[error("gate {kind} expects {expected} qubit(s), got {got}")]
    GateArity {
        kind: String,
        expected: usize,
        got: usize,
    },

    #[error("gate {0} requires an angle")]
    MissingAngle(String),

    #[error("m out of range: m={m} must satisfy 0 < m < 2^{n}")]
    ThresholdOutOfRange { n: usize, m: u64 },

    #[error("range out of range: [{a}, {b}) must satisfy 0 <= a < b <= 2^{n} and not cover every state")]
    InvalidRange { n: usize, a: u64, b: u64 },

    #[error("marked count out of range: M={marked} must satisfy 0 < M <= 2^{n}")]
    MarkedCountOutOfRange { n: usize, marked: u64 },

    #[error("qubit count {n} unsupported (limit {limit})")]
    TooManyQubits { n: usize, limit: usize },

    #[error("state has {got} amplitudes, expected {expected}")]
    StateSize { expected: usize, got: usize },

    #[error("shots must be at least 1")]
    NoShots,

    #[error("depth sweeps need n >= 2, got {0}")]
    SweepWidth(usize),

    #[error("nothing to compose")]
    EmptyComposition,

    #[error("state vector has zero norm")]
    ZeroNorm,

    #[error("invalid circuit json: {0}")]
    Json(String),
}

impl Error {
    /// Domain errors are well-formed requests whose parameters fall outside
    /// an operation's precondition (as opposed to malformed circuits or I/O).
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::ThresholdOutOfRange { .. }
                | Error::InvalidRange { .. }
                | Error::MarkedCountOutOfRange { .. }
                | Error::TooManyQubits { .. }
                | Error::NoShots
                | Error::SweepWidth(_)
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
