//! Learning-to-rank data, feature rankers and NDCG ground truth.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clicks::GradeLookup;
use crate::{DocumentId, Error, PreferenceMatrix, QueryId, RankedList, Result};

mod letor;
mod ndcg;
mod synthetic;

pub use letor::{parse_letor, parse_letor_str, read_letor_file, write_letor, write_letor_file};
pub use ndcg::{ndcg_at_k, NDCG_CUTOFF};
pub use synthetic::{feature_weight, synthesize_dataset, SyntheticSpec};

/// Highest relevance grade in the usual five-level scheme.
pub const DEFAULT_MAX_GRADE: u8 = 4;

/// Mean NDCG differences at or below this count as ties.
pub const NDCG_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub id: DocumentId,
    pub features: Vec<f64>,
    pub grade: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub id: QueryId,
    pub documents: Vec<Document>,
}

impl Query {
    fn document(&self, id: DocumentId) -> Option<&Document> {
        // Ids are usually the within-query ordinal.
        match self.documents.get(id.0 as usize) {
            Some(d) if d.id == id => Some(d),
            _ => self.documents.iter().find(|d| d.id == id),
        }
    }
}

impl GradeLookup for Query {
    fn grade(&self, doc: DocumentId) -> Option<u8> {
        self.document(doc).map(|d| d.grade)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    queries: Vec<Query>,
    index: HashMap<QueryId, usize>,
    num_features: usize,
    max_grade: u8,
}

impl Dataset {
    pub fn new(queries: Vec<Query>, num_features: usize, max_grade: u8) -> Result<Self> {
        if queries.is_empty() {
            return Err(Error::NoQueries);
        }
        let mut index = HashMap::with_capacity(queries.len());
        for (i, q) in queries.iter().enumerate() {
            if index.insert(q.id, i).is_some() {
                return Err(Error::InvalidConfig(format!(
                    "query {} appears twice",
                    q.id
                )));
            }
            if q.documents.is_empty() {
                return Err(Error::InvalidConfig(format!(
                    "query {} has no documents",
                    q.id
                )));
            }
            let mut ids = HashSet::with_capacity(q.documents.len());
            for d in &q.documents {
                if !ids.insert(d.id) {
                    return Err(Error::DuplicateDocument(d.id.0));
                }
                if d.features.len() != num_features {
                    return Err(Error::InvalidConfig(format!(
                        "query {} document {} has {} features, expected {num_features}",
                        q.id,
                        d.id,
                        d.features.len()
                    )));
                }
                if d.grade > max_grade {
                    return Err(Error::InvalidConfig(format!(
                        "query {} document {} has grade {} above maximum {max_grade}",
                        q.id, d.id, d.grade
                    )));
                }
            }
        }
        Ok(Self {
            queries,
            index,
            num_features,
            max_grade,
        })
    }

    pub fn queries(&self) -> &[Query] {
        &self.queries
    }

    pub fn query(&self, id: QueryId) -> Result<&Query> {
        self.index
            .get(&id)
            .map(|&i| &self.queries[i])
            .ok_or(Error::UnknownQuery(id.0))
    }

    pub fn query_ids(&self) -> impl Iterator<Item = QueryId> + '_ {
        self.queries.iter().map(|q| q.id)
    }

    pub fn num_features(&self) -> usize {
        self.num_features
    }

    pub fn max_grade(&self) -> u8 {
        self.max_grade
    }

    pub fn num_documents(&self) -> usize {
        self.queries.iter().map(|q| q.documents.len()).sum()
    }
}

/// Ranks a query's documents by one feature column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeatureRanker(pub usize);

/// Documents by descending feature value; equal values keep ascending id order.
pub fn feature_ranking(ds: &Dataset, query: QueryId, ranker: FeatureRanker) -> Result<RankedList> {
    let q = ds.query(query)?;
    ranking_for(q, ranker, ds.num_features())
}

pub(crate) fn ranking_for(
    q: &Query,
    ranker: FeatureRanker,
    num_features: usize,
) -> Result<RankedList> {
    let f = ranker.0;
    if f >= num_features {
        return Err(Error::FeatureOutOfRange {
            index: f,
            num_features,
        });
    }
    let mut docs: Vec<&Document> = q.documents.iter().collect();
    docs.sort_by(|a, b| {
        b.features[f]
            .total_cmp(&a.features[f])
            .then(a.id.cmp(&b.id))
    });
    RankedList::new(q.id, docs.into_iter().map(|d| d.id).collect())
}

/// Mean NDCG@10 of a feature ranker over `queries`.
pub fn mean_ndcg(ds: &Dataset, ranker: FeatureRanker, queries: &[QueryId]) -> Result<f64> {
    if queries.is_empty() {
        return Err(Error::TooFewQueries { needed: 1, have: 0 });
    }
    let mut total = 0.0;
    for &qid in queries {
        let q = ds.query(qid)?;
        total += ndcg_at_k(&ranking_for(q, ranker, ds.num_features())?, q, NDCG_CUTOFF)?;
    }
    Ok(total / queries.len() as f64)
}

/// Pairwise preferences of higher score over lower; near-equal scores tie.
pub fn preferences_from_scores(scores: &[f64], tolerance: f64) -> PreferenceMatrix {
    PreferenceMatrix::from_upper(scores.len(), |i, j| {
        let diff = scores[i] - scores[j];
        if diff.abs() <= tolerance {
            0.5
        } else if diff > 0.0 {
            1.0
        } else {
            0.0
        }
    })
}

/// Ground-truth preferences from mean NDCG@10 on the test queries.
pub fn ground_truth_matrix(
    ds: &Dataset,
    rankers: &[FeatureRanker],
    test_queries: &[QueryId],
) -> Result<PreferenceMatrix> {
    if test_queries.is_empty() {
        return Err(Error::TooFewQueries { needed: 1, have: 0 });
    }
    let scores = rankers
        .iter()
        .map(|&r| mean_ndcg(ds, r, test_queries))
        .collect::<Result<Vec<_>>>()?;
    Ok(preferences_from_scores(&scores, NDCG_TIE_TOLERANCE))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySplit {
    pub train: Vec<QueryId>,
    pub test: Vec<QueryId>,
}

/// Seeded shuffle of the query ids; the first `max(1, floor(n * fraction))`
/// become training queries and the rest test queries.
pub fn split_queries(ds: &Dataset, train_fraction: f64, seed: u64) -> Result<QuerySplit> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "train fraction {train_fraction} must lie strictly between 0 and 1"
        )));
    }
    let n = ds.queries().len();
    if n < 2 {
        return Err(Error::TooFewQueries { needed: 2, have: n });
    }
    let mut ids: Vec<QueryId> = ds.query_ids().collect();
    ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let train_len = ((n as f64 * train_fraction).floor() as usize).clamp(1, n - 1);
    let test = ids.split_off(train_len);
    Ok(QuerySplit { train: ids, test })
}
