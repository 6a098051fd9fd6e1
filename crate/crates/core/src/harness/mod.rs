//! Simulated online evaluation experiments.
//!
//! Each run samples `k` feature rankers, derives ground-truth preferences
//! from their mean NDCG@10 on held-out queries, then repeatedly samples a
//! training query, multileaves the rankers with every selected method,
//! simulates clicks and folds the inferred preferences into a running mean.
//! The error of that mean against the ground truth is logged over time.

mod config;
mod experiment;
mod metrics;
mod output;

pub use config::{parse_methods, parse_synthetic, DatasetSource, ExperimentConfig};
pub use experiment::{
    is_logged, run_experiment, run_on_dataset, summarize, ErrorCurve, ExperimentResult, Series,
    SeriesSummary,
};
pub use metrics::{bias_error_rate, error_rate, DEFAULT_BIAS_EPSILON};
pub use output::{read_csv, write_csv, write_csv_to, CsvRow, CSV_HEADER};
