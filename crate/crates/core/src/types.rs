//! Lists, clicks and credits exchanged between the algorithms and the harness.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// Document identifier, unique within one query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DocumentId(pub u32);

impl fmt::Display for DocumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QueryId(pub u64);

impl fmt::Display for QueryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn check_distinct(docs: &[DocumentId]) -> Result<()> {
    let mut seen = HashSet::with_capacity(docs.len());
    for &d in docs {
        if !seen.insert(d) {
            return Err(Error::DuplicateDocument(d.0));
        }
    }
    Ok(())
}

/// One ranker's ordered result list for a query, best document first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedList {
    query: QueryId,
    documents: Vec<DocumentId>,
}

impl RankedList {
    pub fn new(query: QueryId, documents: Vec<DocumentId>) -> Result<Self> {
        check_distinct(&documents)?;
        Ok(Self { query, documents })
    }

    pub fn query(&self) -> QueryId {
        self.query
    }

    pub fn documents(&self) -> &[DocumentId] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    /// 1-based rank of `doc`, if present.
    pub fn rank_of(&self, doc: DocumentId) -> Option<usize> {
        self.documents.iter().position(|&d| d == doc).map(|p| p + 1)
    }
}

/// The merged list shown to the user.
///
/// Team Draft style constructions record which ranker contributed each
/// document; probabilistic construction leaves `teams` empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultileavedList {
    documents: Vec<DocumentId>,
    teams: Option<Vec<usize>>,
}

impl MultileavedList {
    pub fn new(documents: Vec<DocumentId>) -> Result<Self> {
        check_distinct(&documents)?;
        Ok(Self {
            documents,
            teams: None,
        })
    }

    pub fn with_teams(
        documents: Vec<DocumentId>,
        teams: Vec<usize>,
        num_rankers: usize,
    ) -> Result<Self> {
        check_distinct(&documents)?;
        if teams.len() != documents.len() {
            return Err(Error::TeamLengthMismatch {
                expected: documents.len(),
                got: teams.len(),
            });
        }
        if let Some(&team) = teams.iter().find(|&&t| t >= num_rankers) {
            return Err(Error::TeamOutOfRange { team, num_rankers });
        }
        Ok(Self {
            documents,
            teams: Some(teams),
        })
    }

    pub fn documents(&self) -> &[DocumentId] {
        &self.documents
    }

    pub fn teams(&self) -> Option<&[usize]> {
        self.teams.as_deref()
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

/// Clicked positions (0-based) of a multileaved list, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClickSet {
    positions: Vec<usize>,
}

impl ClickSet {
    pub fn new(ml: &MultileavedList, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::for_length(ml.len(), positions)
    }

    pub fn for_length(len: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut positions: Vec<usize> = positions.into_iter().collect();
        if let Some(&position) = positions.iter().find(|&&p| p >= len) {
            return Err(Error::ClickOutOfRange { position, len });
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(Self { positions })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }

    /// Check the clicks against a list, for sets built elsewhere.
    pub(crate) fn check_against(&self, ml: &MultileavedList) -> Result<()> {
        match self.positions.last() {
            Some(&position) if position >= ml.len() => Err(Error::ClickOutOfRange {
                position,
                len: ml.len(),
            }),
            _ => Ok(()),
        }
    }
}

/// Per-ranker credit earned from one interaction.
#[derive(Debug, Clone, PartialEq)]
pub struct CreditVector(Vec<f64>);

impl CreditVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidCredit { index, value });
        }
        Ok(Self(values))
    }

    pub fn zeros(num_rankers: usize) -> Self {
        Self(vec![0.0; num_rankers])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub(crate) fn from_raw(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite() && *v >= 0.0));
        Self(values)
    }
}

impl std::ops::Index<usize> for CreditVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}
