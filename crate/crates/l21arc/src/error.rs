use thiserror::Error;

/// Errors raised by instance validation, file parsing, search limits and
/// the instance generator. Arcs and vertices are reported with 1-based
/// input ids, matching the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("family must contain at least one arc")]
    EmptyFamily,

    #[error("arc {arc}: coordinate {value} outside circle [0, {m})")]
    CoordinateOutOfRange { arc: usize, value: u32, m: u32 },

    #[error("arc {arc}: start and finish coincide at {value}")]
    DegenerateArc { arc: usize, value: u32 },

    #[error("endpoint {position} shared by arcs {first} and {second}")]
    DuplicateEndpoint {
        position: u32,
        first: usize,
        second: usize,
    },

    #[error("cut position {position} outside circle [0, {m})")]
    CutOutOfRange { position: u32, m: u32 },

    #[error("interval {id}: left end {left} must lie below right end {right}")]
    BadInterval { id: usize, left: u32, right: u32 },

    #[error("interval endpoint {value} used twice")]
    DuplicateIntervalEndpoint { value: u32 },

    #[error("graph has {n} vertices, above the exact clique limit {limit}")]
    CliqueLimitExceeded { n: usize, limit: usize },

    #[error("graph has {n} vertices, above the exact search limit {limit}")]
    ExactLimitExceeded { n: usize, limit: usize },

    #[error("no labelling fits within span {max_span}; lambda is at least {lower_bound}")]
    SpanBudgetExhausted { max_span: u32, lower_bound: u32 },

    #[error("labelling covers {got} vertices, expected {expected}")]
    LabelCountMismatch { got: usize, expected: usize },

    #[error("no label given for vertex {vertex}")]
    MissingLabel { vertex: usize },

    #[error("vertex {vertex} labelled twice")]
    DuplicateLabel { vertex: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("{0}")]
    InvalidGenSpec(String),

    #[error("cannot cover a circle of {m} positions with {n} arcs of length at most {max_len}")]
    InfeasibleCover { n: usize, max_len: u32, m: u32 },

    #[error("gave up generating distinct endpoints after {attempts} attempts")]
    GenAttemptsExhausted { attempts: usize },
}
