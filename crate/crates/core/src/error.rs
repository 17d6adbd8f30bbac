use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("edge {edge} appears {count} times (expected exactly 2)")]
    EdgeMultiplicity { edge: u32, count: usize },

    #[error("inconsistent orientation at edge {edge}")]
    Orientation { edge: u32 },

    #[error("basepoint edge {edge} is not an edge of the diagram")]
    Basepoint { edge: u32 },

    #[error("operation requires a knot, but the diagram has {components} components")]
    MultiComponent { components: usize },

    #[error("bit-word has length {got}, diagram has {expected} crossings")]
    StateLength { expected: usize, got: usize },

    #[error("crossing {crossing} is already resolved with bit 1 in this state")]
    BitAlreadySet { crossing: usize },

    #[error("crossing index {crossing} out of range")]
    CrossingIndex { crossing: usize },

    #[error("flipping crossing {crossing} changes the circle count by {delta}; the diagram is not planar")]
    NonPlanar { crossing: usize, delta: i64 },

    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("quantum grading {j} is odd; determinant needs a reduced knot table")]
    OddGrading { j: i32 },

    #[error("diagram too large for this path: {0}")]
    TooLarge(String),

    #[error("braid word is invalid: {0}")]
    Braid(String),

    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
