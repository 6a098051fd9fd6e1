//! Multileaved list construction and credit inference.
//!
//! Three methods are provided:
//!
//! * **TDM**, team draft: rankers take turns, in a fresh random order every
//!   round, contributing their best document not yet shown. A click credits
//!   the contributing ranker.
//! * **PM**, probabilistic: as TDM, but each ranker *samples* a document with
//!   probability proportional to `1 / rank^3` over its not-yet-shown
//!   documents. Credit marginalizes over every assignment of shown documents
//!   to rankers that could have produced the list.
//! * **SOSM**, sample-only scored: TDM construction, but a ranker's credit for
//!   a click depends only on how that ranker orders the shown documents among
//!   themselves.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::{ClickSet, CreditVector, DocumentId, Error, MultileavedList, RankedList, Result};

mod probabilistic;
mod sample_only;
mod team_draft;

pub use probabilistic::{
    pm_credits, pm_credits_exact, pm_credits_sampled, pm_doc_probability, pm_multileave,
};
pub use sample_only::{sosm_credits, sosm_multileave};
pub use team_draft::{tdm_credits, team_draft_multileave};

/// Exponent of the rank-based softmax used by PM sampling and SOSM scoring.
pub const RANK_EXPONENT: i32 = 3;

/// Presentation length of a first result page.
pub const DEFAULT_LENGTH: usize = 10;

pub const DEFAULT_PM_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PmCreditMode {
    /// Closed-form marginal over assignments.
    #[default]
    Exact,
    /// Monte Carlo estimate from `pm_samples` sampled assignments.
    Sampled,
}

impl FromStr for PmCreditMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "sampled" => Ok(Self::Sampled),
            other => Err(Error::InvalidConfig(format!(
                "unknown PM mode {other:?} (expected exact or sampled)"
            ))),
        }
    }
}

impl fmt::Display for PmCreditMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::Sampled => "sampled",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultileaveConfig {
    /// Maximum number of documents presented.
    pub length: usize,
    /// Rank exponent; [`RANK_EXPONENT`] unless deliberately overridden.
    pub exponent: i32,
    pub pm_mode: PmCreditMode,
    pub pm_samples: usize,
}

impl Default for MultileaveConfig {
    fn default() -> Self {
        Self {
            length: DEFAULT_LENGTH,
            exponent: RANK_EXPONENT,
            pm_mode: PmCreditMode::Exact,
            pm_samples: DEFAULT_PM_SAMPLES,
        }
    }
}

impl MultileaveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::InvalidConfig(
                "presentation length must be at least 1".into(),
            ));
        }
        if self.exponent < 1 {
            return Err(Error::InvalidConfig(
                "rank exponent must be positive".into(),
            ));
        }
        if self.pm_samples == 0 {
            return Err(Error::InvalidConfig(
                "PM sample count must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// The multileaving methods under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Tdm,
    Pm,
    Sosm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Tdm, Method::Pm, Method::Sosm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Tdm => "tdm",
            Method::Pm => "pm",
            Method::Sosm => "sosm",
        }
    }

    /// Stable index used to derive per-method random streams.
    pub fn slot(self) -> u8 {
        self as u8
    }

    pub fn multileave<R: Rng + ?Sized>(
        self,
        rankings: &[RankedList],
        config: &MultileaveConfig,
        rng: &mut R,
    ) -> Result<MultileavedList> {
        match self {
            Method::Tdm => team_draft_multileave(rankings, config, rng),
            Method::Pm => pm_multileave(rankings, config, rng),
            Method::Sosm => sosm_multileave(rankings, config, rng),
        }
    }

    /// Credit for one interaction. `rng` is only consumed by sampled PM credit.
    pub fn credit<R: Rng + ?Sized>(
        self,
        rankings: &[RankedList],
        ml: &MultileavedList,
        clicks: &ClickSet,
        config: &MultileaveConfig,
        rng: &mut R,
    ) -> Result<CreditVector> {
        match self {
            Method::Tdm => tdm_credits(ml, clicks, rankings.len()),
            Method::Pm => pm_credits(rankings, ml, clicks, config, rng),
            Method::Sosm => sosm_credits(rankings, ml, clicks, config),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tdm" => Ok(Method::Tdm),
            "pm" => Ok(Method::Pm),
            "sosm" => Ok(Method::Sosm),
            other => Err(Error::InvalidConfig(format!(
                "unknown method {other:?} (expected tdm, pm or sosm)"
            ))),
        }
    }
}

/// Checks a ranker set and returns how many distinct documents it covers.
fn validate_rankings(rankings: &[RankedList]) -> Result<usize> {
    let first = rankings.first().ok_or(Error::NoRankers)?;
    if let Some(other) = rankings.iter().find(|r| r.query() != first.query()) {
        return Err(Error::QueryMismatch(first.query().0, other.query().0));
    }
    let mut all: Vec<DocumentId> = rankings
        .iter()
        .flat_map(|r| r.documents().iter().copied())
        .collect();
    all.sort_unstable();
    all.dedup();
    if all.is_empty() {
        return Err(Error::AllRankingsEmpty);
    }
    Ok(all.len())
}

/// Unnormalized weights `rank^-exponent` with prefix sums for normalizers.
#[derive(Debug, Clone)]
pub(crate) struct RankWeights {
    weights: Vec<f64>,
    // prefix[m] = sum of the first m weights
    prefix: Vec<f64>,
}

impl RankWeights {
    pub(crate) fn new(exponent: i32, max_len: usize) -> Self {
        let weights: Vec<f64> = (1..=max_len).map(|r| (r as f64).powi(-exponent)).collect();
        let mut prefix = Vec::with_capacity(max_len + 1);
        prefix.push(0.0);
        let mut acc = 0.0;
        for w in &weights {
            acc += w;
            prefix.push(acc);
        }
        Self { weights, prefix }
    }

    /// Weight of 1-based `rank`.
    pub(crate) fn weight(&self, rank: usize) -> f64 {
        self.weights[rank - 1]
    }

    /// Sum of weights of ranks `1..=m`.
    pub(crate) fn normalizer(&self, m: usize) -> f64 {
        self.prefix[m]
    }
}

/// For every multileaved position, the 0-based position of that document in
/// `ranking`, if the ranking contains it.
pub(crate) fn positions_in(ranking: &[DocumentId], shown: &[DocumentId]) -> Vec<Option<usize>> {
    let mut out = vec![None; shown.len()];
    let mut found = 0;
    for (p, d) in ranking.iter().enumerate() {
        if let Some(r) = shown.iter().position(|s| s == d) {
            out[r] = Some(p);
            found += 1;
            if found == shown.len() {
                break;
            }
        }
    }
    out
}
