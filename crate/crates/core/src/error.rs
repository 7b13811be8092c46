use thiserror::Error;

/// Errors raised by the model, analysis and search layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: u8, alphabet: usize },

    #[error("alphabet size {0} unsupported (must be in 2..=36)")]
    Alphabet(usize),

    #[error("invalid network parameters: {0}")]
    Params(String),

    #[error("code is empty")]
    EmptyCode,

    #[error("minimum distance {found} is below the required {required}")]
    MinDistance { found: usize, required: usize },

    #[error("word {0} is not a codeword")]
    NotACodeword(String),

    #[error("edge {0} is outside the manipulable set out(S)")]
    EdgeOutsideAdversary(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("injection impossible: {needed} states needed but only {available} available")]
    TooManyStates { needed: u128, available: u128 },

    #[error("state {state} decodes to a block with no member of head {head}: non-codeword traffic")]
    NonCodewordTraffic { state: usize, head: u8 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0} is not applicable: {1}")]
    NotApplicable(&'static str, String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("table of size {0} exceeds the supported limit")]
    TooLarge(u128),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
