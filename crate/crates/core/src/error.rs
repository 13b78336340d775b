//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed dump XML at byte offset {offset}: {message}")]
    DumpXml { offset: u64, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("gini is undefined for {0}")]
    GiniUndefined(&'static str),

    #[error("missing linguistic scores for comment key {0}")]
    MissingScore(String),

    #[error("registry error: {0}")]
    Registry(String),

    #[error("training requires both classes, got single-class labels")]
    SingleClassLabels,

    #[error("column mismatch: missing {missing:?}, unexpected {extra:?}")]
    ColumnMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("metrics require at least one positive and one negative label")]
    SingleClassMetrics,

    #[error("bootstrap iteration produced single-class out-of-bag data after {0} retries")]
    BootstrapExhausted(usize),

    #[error("fold {fold} has single-class training data; population too small")]
    FoldSingleClass { fold: usize },

    #[error("missing review counts for articles: {0:?}")]
    MissingReviewCounts(Vec<String>),

    #[error("unknown column {column:?} in group {group:?}")]
    UnknownGroupColumn { group: String, column: String },

    #[error("article {article} is missing feature family {family}")]
    MissingFamily { article: String, family: String },

    #[error("http fetch failed for {url}: {message}")]
    Fetch { url: String, message: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
