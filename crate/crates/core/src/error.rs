use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),

    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("reduction budget of {0} steps exceeded")]
    BudgetExceeded(u64),

    #[error("Groebner basis was computed without representation tracking")]
    TrackingAbsent,

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("the ring is trivial (1 lies in the relation ideal)")]
    TrivialRing,

    #[error("row is not unimodular")]
    NotUnimodular,

    #[error("certificate fails verification: sum a_i*b_i reduces to {0}, not 1")]
    BadCertificate(String),

    #[error("certificate missing")]
    CertificateMissing,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("elementary move needs distinct indices, got i = j = {0}")]
    DegenerateMove(usize),

    #[error("expected length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("matrix has odd size {0}")]
    OddSize(usize),

    #[error("matrix is not alternating at ({0}, {1})")]
    NotAlternating(usize, usize),

    #[error("`{0}` is not a unit")]
    NonUnit(String),

    #[error("symmetric mode requires certificate equal to the row: {0}")]
    SymmetricModeRefused(String),

    #[error("identity check failed: {0}")]
    Verification(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("irregular value: {0}")]
    IrregularValue(String),

    #[error("curve left the stereographic chart")]
    ChartEscape,

    #[error("curve tracing did not close after {0} steps")]
    OpenCurve(usize),

    #[error("linking residual {residual} exceeds {limit} (L = {linking})")]
    ResidualTooLarge {
        linking: f64,
        residual: f64,
        limit: f64,
    },

    #[error("unknown map `{0}`")]
    UnknownMap(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the failure is an input problem rather than a failed check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UndeclaredVariable(_)
                | Error::VariableMismatch { .. }
                | Error::Input(_)
                | Error::Io(_)
                | Error::Json(_)
                | Error::UnknownMap(_)
                | Error::WrongLength { .. }
                | Error::SizeMismatch(_)
                | Error::OddSize(_)
                | Error::NotAlternating(..)
                | Error::IndexOutOfRange { .. }
                | Error::DegenerateMove(_)
                | Error::DimensionMismatch { .. }
                | Error::CertificateMissing
        )
    }
}
