use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation word is not a bijection of 1..{0}")]
    NotAPermutation(usize),
    #[error("permutation has odd length {0}; D-permutations live on even ground sets")]
    OddLength(usize),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("series inverse requires constant coefficient 1")]
    NonUnitConstant,
    #[error("continued-fraction coefficient lists cover depth {have}, need {need}")]
    InsufficientDepth { have: usize, need: usize },
    #[error("J-fraction undefined at depth {0}: zero pivot")]
    ZeroPivot(usize),
    #[error("restriction requires delta_1 = delta_2 = 0 and alpha_1 a nonzero unit monomial")]
    BadRestriction,
    #[error("contraction requires the {0} delta coefficients to vanish")]
    BadContraction(&'static str),
    #[error("step {step}: label {label} outside the admissible range 0..={max}")]
    InvalidLabel { step: usize, label: String, max: String },
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
    #[error("unknown sequence name `{0}`")]
    UnknownSequence(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
