use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("incompatible genomes: length {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("gene {value} at position {position} exceeds arity {arity}")]
    GeneOutOfRange {
        position: usize,
        value: u32,
        arity: u32,
    },

    #[error("no position with arity >= 2; mutation impossible")]
    NoMutablePosition,

    #[error("neighborhood distance {k} exceeds {mutable} mutable positions")]
    DistanceTooLarge { k: usize, mutable: usize },

    #[error("genome length {len} too short for crossover (need >= 2)")]
    NoInteriorCut { len: usize },

    #[error("{parents} parents cannot each own a segment of a length-{len} genome")]
    TooManyParents { parents: usize, len: usize },

    #[error("crossover requires at least one parent")]
    NoParents,

    #[error("iter_max must be >= 1")]
    ZeroIterMax,

    #[error("invalid bounds: min_t {min_t} must be < max_t {max_t}")]
    InvalidBounds { min_t: f64, max_t: f64 },

    #[error("unknown benchmark id `{0}`")]
    UnknownBenchmark(String),

    #[error("unknown algorithm id `{0}`")]
    UnknownAlgorithm(String),

    #[error("binary codec requires an all-binary genome (arity 2 everywhere)")]
    NonBinaryGenome,

    #[error("grid {rows}x{cols} cannot be split into four equal quadrants (rows and cols must be even)")]
    OddQuadrants { rows: usize, cols: usize },

    #[error("grid must be at least 2x2 with positive spacing")]
    DegenerateGrid,

    #[error("allocation instance needs at least one center and one demand point")]
    EmptyInstance,

    #[error("ragged input: expected {expected} generations, found {found}")]
    RaggedRuns { expected: usize, found: usize },

    #[error("empty input sequence")]
    EmptyInput,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("malformed file {path}: {reason}")]
    MalformedFile { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
