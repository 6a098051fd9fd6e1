use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate document {0} in list")]
    DuplicateDocument(u32),
    #[error("team labels: expected {expected} labels, got {got}")]
    TeamLengthMismatch { expected: usize, got: usize },
    #[error("team label {team} out of range for {num_rankers} rankers")]
    TeamOutOfRange { team: usize, num_rankers: usize },
    #[error("multileaved list carries no team labels")]
    MissingTeams,
    #[error("click position {position} out of range for list of length {len}")]
    ClickOutOfRange { position: usize, len: usize },
    #[error("credit vector entry {index} is {value}; credits must be finite and non-negative")]
    InvalidCredit { index: usize, value: f64 },
    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("running mean requires t >= 1")]
    ZeroCount,
    #[error("no rankings supplied")]
    NoRankers,
    #[error("all rankings are empty")]
    AllRankingsEmpty,
    #[error("rankings belong to different queries ({0} and {1})")]
    QueryMismatch(u64, u64),
    #[error("multileaved list is empty")]
    EmptyMultileaving,
    #[error("ranking is empty after removing chosen documents")]
    RankingExhausted,
    #[error("no relevance grade for document {0}")]
    MissingGrade(u32),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no queries")]
    NoQueries,
    #[error("unknown query {0}")]
    UnknownQuery(u64),
    #[error("feature index {index} out of range ({num_features} features)")]
    FeatureOutOfRange { index: usize, num_features: usize },
    #[error("need at least {needed} queries, have {have}")]
    TooFewQueries { needed: usize, have: usize },
    #[error("{requested} rankers requested but the dataset has only {available} features")]
    TooManyRankers { requested: usize, available: usize },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
