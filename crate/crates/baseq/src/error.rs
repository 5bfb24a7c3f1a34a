use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sequence text {text:?}: only '+' and '-' are allowed")]
    ParseSequence { text: String },
    #[error("invalid sequence element {value} at index {index}: must be +1 or -1")]
    BadElement { index: usize, value: i64 },
    #[error("sequence of length {len} exceeds the supported maximum of 63")]
    SequenceTooLong { len: usize },
    #[error("quadruple lengths {a}/{b}/{c}/{d} do not match the (n+1,n+1,n,n) shape")]
    QuadrupleShape { a: usize, b: usize, c: usize, d: usize },
    #[error("invalid code {text:?} for n={n}: {reason}")]
    ParseCode { text: String, n: usize, reason: String },
    #[error("quad {index} of ({pair}) has the wrong residue class for its position")]
    QuadKindMismatch { pair: &'static str, index: usize },
    #[error("the swap of quad labels 4 and 5 is undefined: quad {index} of (C;D) is not a BS-quad pattern")]
    TauUndefined { index: usize },
    #[error("group elements have different sequence-length parities")]
    ParityMismatch,
    #[error("quadruple is not a member of BS(n+1,n)")]
    NotBaseSequences,
    #[error("n={n} is out of range for this operation: {reason}")]
    UnsupportedN { n: usize, reason: String },
    #[error("fixture data malformed at line {line}: {reason}")]
    FixtureFormat { line: usize, reason: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("composed product has non-unit coefficient {value} at degree {index}")]
    NotSignPolynomial { index: usize, value: i64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
