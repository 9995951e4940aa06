use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a permutation needs at least one entry")]
    Empty,
    #[error("duplicate value {value}")]
    Duplicate { value: usize },
    #[error("value {value} is outside 1..={degree}")]
    ValueOutOfRange { value: usize, degree: usize },
    #[error("pattern of degree {pattern} is longer than the permutation (degree {degree})")]
    PatternTooLarge { pattern: usize, degree: usize },
    #[error("letter {letter} is outside 1..={max} for degree {degree}", max = degree.saturating_sub(1))]
    LetterOutOfRange { letter: usize, degree: usize },
    #[error("letters {letters:?} do not form a run of consecutive integers")]
    NotARun { letters: Vec<usize> },
    #[error("permutation {perm} is not boolean: contains {pattern} at positions {positions:?}")]
    NotBoolean {
        perm: String,
        pattern: &'static str,
        positions: Vec<usize>,
    },
    #[error("word {word} is not reduced")]
    NotReduced { word: String },
    #[error("the identity permutation has no rho image")]
    Identity,
    #[error("degree {degree} exceeds the enumeration guard of {max}")]
    DegreeGuard { degree: usize, max: usize },
    #[error("more than {limit} reduced words; refusing to enumerate")]
    TooManyWords { limit: usize },
    #[error("index {index} is outside 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("invalid tableau: {reason}")]
    InvalidTableau { reason: String },
    #[error("tableau has {rows} rows; at most two are allowed here")]
    TooManyRows { rows: usize },
    #[error("{set:?} cannot be the second row of a standard tableau")]
    NotASecondRow { set: Vec<i64> },
    #[error("{what} is crowded: the window [{start}, {end}] holds {count} elements")]
    Crowded {
        what: String,
        start: i64,
        end: i64,
        count: usize,
    },
    #[error("the construction needs letter {letter}, which does not fit in degree {degree}")]
    DegreeTooSmall { letter: usize, degree: usize },
    #[error("binary word has a run of {len} ones starting at index {start}; runs of ones must be odd")]
    EvenRunOfOnes { start: usize, len: usize },
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
