use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{Dataset, Document, Query, DEFAULT_MAX_GRADE};
use crate::{DocumentId, Error, QueryId, Result};

/// Shape of a synthetic learning-to-rank dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub queries: usize,
    pub docs_per_query: usize,
    pub features: usize,
    /// Standard deviation of the Gaussian noise added to every feature.
    pub noise: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn new(queries: usize, docs_per_query: usize, features: usize, seed: u64) -> Self {
        Self {
            queries,
            docs_per_query,
            features,
            noise: 1.0,
            seed,
        }
    }
}

/// How strongly feature `f` of `num_features` tracks relevance: evenly spread
/// over `[0, 1]`, from pure noise (`f = 0`) to the most informative feature.
pub fn feature_weight(f: usize, num_features: usize) -> f64 {
    if num_features <= 1 {
        1.0
    } else {
        f as f64 / (num_features - 1) as f64
    }
}

/// Grades uniform over `0..=4`; feature `f` is `feature_weight(f) * grade`
/// plus Gaussian noise, so feature rankers span the range from random to
/// near-perfect.
pub fn synthesize_dataset(spec: &SyntheticSpec) -> Result<Dataset> {
    if spec.queries == 0 || spec.docs_per_query == 0 || spec.features == 0 {
        return Err(Error::InvalidConfig(
            "synthetic dataset counts must all be at least 1".into(),
        ));
    }
    if !(spec.noise >= 0.0 && spec.noise.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "noise scale {} must be finite and non-negative",
            spec.noise
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let weights: Vec<f64> = (0..spec.features)
        .map(|f| feature_weight(f, spec.features))
        .collect();
    let queries = (0..spec.queries)
        .map(|q| {
            let documents = (0..spec.docs_per_query)
                .map(|d| {
                    let grade = rng.random_range(0..=DEFAULT_MAX_GRADE);
                    let features = weights
                        .iter()
                        .map(|w| {
                            w * grade as f64 + spec.noise * rng.sample::<f64, _>(StandardNormal)
                        })
                        .collect();
                    Document {
                        id: DocumentId(d as u32),
                        features,
                        grade,
                    }
                })
                .collect();
            Query {
                id: QueryId(q as u64 + 1),
                documents,
            }
        })
        .collect();
    Dataset::new(queries, spec.features, DEFAULT_MAX_GRADE)
}
