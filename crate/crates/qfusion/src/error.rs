use thiserror::Error;

/// Errors produced by fusion-model queries and subgroup analyses.
#[derive(Debug, Error)]
pub enum FusionError {
    #[error("label `{label}` belongs to model `{label_model}`, not `{expected_model}`")]
    ModelMismatch {
        label: String,
        label_model: String,
        expected_model: String,
    },

    #[error("label `{label}` is not valid in model `{model}`: {reason}")]
    InvalidLabel {
        label: String,
        model: String,
        reason: String,
    },

    #[error("cannot parse `{text}` as a label of model `{model}`: {reason}")]
    ParseLabel {
        text: String,
        model: String,
        reason: String,
    },

    #[error("invalid model parameter: {0}")]
    InvalidModel(String),

    #[error("restriction table has no entry for label `{0}`")]
    MissingRestriction(String),

    #[error("restriction data is inconsistent: {0}")]
    InconsistentRestriction(String),

    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("quotient of a non-normal subgroup (witness label `{witness}`)")]
    NotNormal { witness: String },

    #[error("operation unsupported: {0}")]
    Unsupported(String),

    #[error("character table `{table}` is malformed: {reason}")]
    BadCharTable { table: String, reason: String },

    #[error("embedding data is inconsistent: {0}")]
    BadEmbedding(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FusionError>;
