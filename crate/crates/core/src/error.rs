use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("P and Q must be distinct polynomials")]
    EqualPolynomials,

    #[error("Q does not eventually dominate P; swap the two polynomials")]
    NotDominant,

    #[error("the pair is not in the equal-degree, equal-leading-coefficient case")]
    NotCaseII,

    #[error("the pair is not in the case deg Q/deg P > 1 or leading ratio > 1")]
    NotCaseI,

    #[error("need integers 0 < a < b (got a={a}, b={b})")]
    BadPair { a: u64, b: u64 },

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("window {window} is smaller than a0 = {a0}")]
    WindowTooSmall { window: u64, a0: u64 },

    #[error("a0 is not admissible: {0}")]
    InadmissibleA0(String),

    #[error("no admissible a0 up to {scan_limit}")]
    NoAdmissibleA0 { scan_limit: u64 },

    #[error("pattern must be nonempty")]
    EmptyPattern,

    #[error("no configuration exists at the requested survivor count")]
    NoConfiguration,

    #[error("set must be nonempty")]
    EmptySet,

    #[error("window of length {len} does not cover index {needed}")]
    WindowOverrun { needed: u64, len: u64 },

    #[error("divisibility condition violated: {0}")]
    Divisibility(String),

    #[error("element is not positive: {0}")]
    NonPositiveElement(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::InvalidPolynomial(_) => "InvalidPolynomial",
            Error::Domain(_) => "DomainError",
            Error::EqualPolynomials => "EqualPolynomials",
            Error::NotDominant => "NotDominant",
            Error::NotCaseII => "NotCaseII",
            Error::NotCaseI => "NotCaseI",
            Error::BadPair { .. } => "BadPair",
            Error::BadParams(_) => "BadParams",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::InadmissibleA0(_) => "InadmissibleA0",
            Error::NoAdmissibleA0 { .. } => "NoAdmissibleA0",
            Error::EmptyPattern => "EmptyPattern",
            Error::NoConfiguration => "NoConfiguration",
            Error::EmptySet => "EmptySet",
            Error::WindowOverrun { .. } => "WindowOverrun",
            Error::Divisibility(_) => "DivisibilityError",
            Error::NonPositiveElement(_) => "NonPositiveElement",
            Error::Overflow(_) => "Overflow",
            Error::Io(_) => "IoError",
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
