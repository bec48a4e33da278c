use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("z = {re} + {im}i lies within {eps} of the half-period lattice")]
    DegenerateZ { re: f64, im: f64, eps: f64 },
    #[error(transparent)]
    Core(#[from] hometree::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl LabError {
    /// Process exit code: 1 for rejected input, 3 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Config(_) | LabError::DegenerateZ { .. } => 1,
            LabError::Core(hometree::Error::NoSolution(_)) => 1,
            LabError::Core(hometree::Error::InvalidParameter(_)) => 1,
            _ => 3,
        }
    }
}

pub type LabResult<T> = std::result::Result<T, LabError>;
