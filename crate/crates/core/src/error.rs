//! Error type shared across the library.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: self-loop '{label} {label}' is not allowed")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: duplicate edge '{u} {v}'")]
    DuplicateEdge { line: usize, u: String, v: String },

    #[error("({0}, {1}, {2}) is not a 3-clique of the graph")]
    InvalidClique(u32, u32, u32),

    #[error("clique {0} has no incoming neighbors and does not root a bubble")]
    NotABubbleRoot(String),

    #[error("the clique poset has a single maximal element; no maximal bubble exists")]
    DegenerateMaximalBubble,

    #[error("bubbles come from different analyses and cannot be compared")]
    MixedAnalyses,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("weight matrix: {0}")]
    Matrix(String),

    #[error("weight matrix is asymmetric at ({i}, {j}): {a} vs {b}")]
    AsymmetricMatrix { i: usize, j: usize, a: f64, b: f64 },

    #[error("graph order {n} exceeds the exhaustive-scan limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("unknown graph name '{0}' (expected k4, octahedron or icosahedron)")]
    UnknownGraphName(String),

    #[error("generation must be at least 1, got {0}")]
    InvalidGeneration(u32),

    #[error("graph order must be at least {min}, got {n}")]
    OrderTooSmall { n: usize, min: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
