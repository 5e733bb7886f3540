use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { position: usize, ch: char },

    #[error("letter {letter:?} at position {position} is outside an alphabet of size {size}")]
    LetterOutsideAlphabet {
        position: usize,
        letter: char,
        size: usize,
    },

    #[error("alphabet size must be between 1 and 26, got {0}")]
    BadAlphabetSize(usize),

    #[error("factor [{i}..{j}] is out of range for a word of length {len}")]
    OutOfRange { i: usize, j: usize, len: usize },

    #[error("words are not compatible")]
    Incompatible,

    #[error("word is not an {r}-th power")]
    NotAPower { r: usize },

    #[error("bad exponent {r}: {reason}")]
    BadExponent { r: usize, reason: &'static str },

    #[error("alphabet of size {available} is too small, need {needed} letters")]
    AlphabetTooSmall { needed: usize, available: usize },

    #[error("invalid parameter {name}: {reason}")]
    BadParameter { name: &'static str, reason: String },

    #[error("resource limit exceeded: {required} instances needed, budget is {budget}")]
    ResourceLimit { required: u128, budget: u64 },
}
