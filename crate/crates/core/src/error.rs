use alloc::string::String;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow computing phi({p},{r},{i})")]
    Overflow { p: u32, r: u32, i: i64 },

    #[error("contract violation: {0}")]
    Contract(&'static str),

    #[error("word length {len} exceeds the supported maximum of 64")]
    WordTooLong { len: usize },

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("word {word} has length {got}, expected {expected}")]
    LengthMismatch {
        word: Word,
        got: usize,
        expected: usize,
    },

    #[error("{word} is not a valid codeword for the given cube")]
    InvalidWord { word: Word },

    #[error("{value} is out of range, largest encodable value is {max}")]
    OutOfRange { value: u64, max: u64 },

    #[error("graph order {order} exceeds the vertex budget {budget}")]
    Budget { order: u64, budget: u64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("count disagreement in {what}: constructed {constructed}, formula {formula}")]
    FormulaViolation {
        what: &'static str,
        constructed: u64,
        formula: i128,
    },
}
