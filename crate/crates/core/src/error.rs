use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("enumeration of {needed} subsets exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("no connected sample after {attempts} attempts (n = {n}, p = {p})")]
    RetriesExceeded { attempts: usize, n: usize, p: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
