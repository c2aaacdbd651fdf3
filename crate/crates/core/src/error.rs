use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {0} is used more than once")]
    DuplicatePosition(usize),
    #[error("positions do not cover 1..2n exactly")]
    NotPerfect,
    #[error("arc {0}-{1} has its opener after its closer")]
    OpenerAfterCloser(usize, usize),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("size {size} exceeds the supported bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("no pattern family P{0}^k (expected 2..=5)")]
    BadFamilyIndex(u32),
    #[error("poset contains an induced 2+2")]
    Not22Free,
    #[error("relation is not a strict partial order")]
    NotAnOrder,
    #[error("matching has a nesting pair")]
    NotNonnesting,
    #[error("input violates the required avoidance: {0}")]
    PatternViolation(String),
    #[error("iteration cap of {0} moves exceeded")]
    IterationCapExceeded(usize),
    #[error("first ordinal summand has no isolated element")]
    NoIsolatedElement,
    #[error("sequence is not a restricted growth function with the expected run structure")]
    NotRgf,
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("not an ascent sequence")]
    InvalidAscentSequence,
    #[error("not a permutation")]
    InvalidPermutation,
    #[error("not a Dyck path")]
    InvalidDyckPath,
}

impl Error {
    /// Short variant name, used by the CLI when reporting domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicatePosition(_) => "DuplicatePosition",
            Error::NotPerfect => "NotPerfect",
            Error::OpenerAfterCloser(..) => "OpenerAfterCloser",
            Error::Parse { .. } => "ParseError",
            Error::TooLarge { .. } => "TooLarge",
            Error::BadFamilyIndex(_) => "BadFamilyIndex",
            Error::Not22Free => "Not22Free",
            Error::NotAnOrder => "NotAnOrder",
            Error::NotNonnesting => "NotNonnesting",
            Error::PatternViolation(_) => "PatternViolation",
            Error::IterationCapExceeded(_) => "IterationCapExceeded",
            Error::NoIsolatedElement => "NoIsolatedElement",
            Error::NotRgf => "NotRGF",
            Error::NonUnitConstantTerm => "NonUnitConstantTerm",
            Error::InvalidAscentSequence => "InvalidAscentSequence",
            Error::InvalidPermutation => "InvalidPermutation",
            Error::InvalidDyckPath => "InvalidDyckPath",
        }
    }
}
