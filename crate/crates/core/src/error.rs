use thiserror::Error;

/// Errors raised by the tree, spectral, operator and transform routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("boundary prefix of depth {depth} cannot resolve a vertex at distance {needed}")]
    PrefixTooShort { depth: usize, needed: usize },

    #[error("spectral parameter {re}+{im}i lies within {eps:e} of a pole of the c-function")]
    NearPole { re: f64, im: f64, eps: f64 },

    #[error("p = 2 has a degenerate (segment) spectrum; use the segment test")]
    DegenerateAxis,

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("operator needs radius at least {needed}, got {radius}")]
    EmptyInterior { radius: usize, needed: usize },

    #[error("boundary data of depth {depth} is too shallow for a vertex at distance {needed}")]
    DepthTooShallow { depth: usize, needed: usize },

    #[error("{samples} samples cannot resolve frequencies up to {n_max} (need {})", 2 * n_max + 1)]
    Undersampled { samples: usize, n_max: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
