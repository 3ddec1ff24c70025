use std::fmt;

use thiserror::Error;

/// Parse failure with the byte offset where the input stopped making sense
/// and the tokens that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match &self.found {
            Some(tok) => write!(f, ", found `{tok}`"),
            None => write!(f, ", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0} is not a unit imaginary quaternion")]
    NotImagUnit(String),
    #[error("{i} and {j} do not anticommute")]
    NotOrthogonal { i: String, j: String },
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("expression is not a right-coefficient polynomial in q: {0}")]
    NotSliceRegularForm(String),
    #[error("probe set is empty")]
    EmptyProbeSet,
    #[error("q-bar Taylor peel failed: {0}")]
    NotReducible(String),
    #[error("slice mismatch: polynomial lives on {poly}, probe pair on {pair}")]
    SliceMismatch { poly: String, pair: String },
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
