use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty support has no least element")]
    EmptySupport,

    #[error("the zero series has no support")]
    ZeroHasNoSupport,

    #[error("leading term {leading} is not below the truncation guarantee {guarantee}")]
    GuaranteeTooCoarse { leading: String, guarantee: String },

    #[error("attempted to invert zero")]
    ZeroInversion,

    #[error("Magnus comparison of {a} and {b} found no difference up to degree {cap}")]
    DeepeningCapExceeded { a: String, b: String, cap: usize },

    #[error("malformed closure certificate: {0}")]
    MalformedCertificate(String),

    #[error("not a subgroup of S3: {0}")]
    NotASubgroup(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unbound symbol `{0}`")]
    Unbound(String),

    #[error("`{0}` has no meaning in this target")]
    Unsupported(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("unknown suite {0}")]
    UnknownSuite(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
