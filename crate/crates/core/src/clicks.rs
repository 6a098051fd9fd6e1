//! Simulated users.
//!
//! Cascade users scan the presented list top to bottom. At each document
//! they click with a probability that depends on its relevance grade and,
//! after a click, stop scanning with a grade-dependent probability. The
//! random user clicks every position independently, ignoring relevance.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Deserialize;

use crate::{ClickSet, DocumentId, Error, MultileavedList, Result};

/// Relevance grade source for documents of one query.
pub trait GradeLookup {
    fn grade(&self, doc: DocumentId) -> Option<u8>;
}

/// Grades indexed by document id.
impl GradeLookup for [u8] {
    fn grade(&self, doc: DocumentId) -> Option<u8> {
        self.get(doc.0 as usize).copied()
    }
}

impl GradeLookup for Vec<u8> {
    fn grade(&self, doc: DocumentId) -> Option<u8> {
        self.as_slice().grade(doc)
    }
}

impl GradeLookup for HashMap<DocumentId, u8> {
    fn grade(&self, doc: DocumentId) -> Option<u8> {
        self.get(&doc).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClickModelName {
    Perfect,
    Navigational,
    Informational,
    Random,
}

impl ClickModelName {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Perfect => "perfect",
            Self::Navigational => "navigational",
            Self::Informational => "informational",
            Self::Random => "random",
        }
    }
}

impl fmt::Display for ClickModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClickModelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perfect" => Ok(Self::Perfect),
            "navigational" => Ok(Self::Navigational),
            "informational" => Ok(Self::Informational),
            "random" => Ok(Self::Random),
            other => Err(Error::InvalidConfig(format!(
                "unknown click model {other:?} (expected perfect, navigational, informational or random)"
            ))),
        }
    }
}

/// Per-grade click and stop probabilities, indexed by grade `0..=max_grade`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CascadeModel {
    pub p_click: Vec<f64>,
    pub p_stop: Vec<f64>,
}

impl CascadeModel {
    pub fn new(p_click: Vec<f64>, p_stop: Vec<f64>) -> Result<Self> {
        let model = Self { p_click, p_stop };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p_click.is_empty() || self.p_click.len() != self.p_stop.len() {
            return Err(Error::InvalidConfig(format!(
                "click and stop tables need the same non-zero length, got {} and {}",
                self.p_click.len(),
                self.p_stop.len()
            )));
        }
        if let Some(p) = self
            .p_click
            .iter()
            .chain(&self.p_stop)
            .find(|p| !(0.0..=1.0).contains(*p))
        {
            return Err(Error::InvalidConfig(format!(
                "probability {p} outside [0, 1]"
            )));
        }
        Ok(())
    }

    pub fn perfect() -> Self {
        Self {
            p_click: vec![0.0, 0.2, 0.4, 0.8, 1.0],
            p_stop: vec![0.0; 5],
        }
    }

    pub fn navigational() -> Self {
        Self {
            p_click: vec![0.05, 0.3, 0.5, 0.7, 0.95],
            p_stop: vec![0.0, 0.2, 0.3, 0.4, 0.9],
        }
    }

    pub fn informational() -> Self {
        Self {
            p_click: vec![0.4, 0.6, 0.7, 0.8, 0.9],
            p_stop: vec![0.1, 0.2, 0.3, 0.4, 0.5],
        }
    }

    pub fn max_grade(&self) -> u8 {
        (self.p_click.len() - 1) as u8
    }
}

pub const DEFAULT_RANDOM_CLICK_PROBABILITY: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub enum ClickModel {
    Cascade(CascadeModel),
    Random { click_probability: f64 },
}

impl ClickModel {
    pub fn simulate<G, R>(
        &self,
        ml: &MultileavedList,
        relevance: &G,
        rng: &mut R,
    ) -> Result<ClickSet>
    where
        G: GradeLookup + ?Sized,
        R: Rng + ?Sized,
    {
        match self {
            ClickModel::Cascade(model) => simulate_clicks(ml, relevance, model, rng),
            ClickModel::Random { click_probability } => random_clicks(ml, *click_probability, rng),
        }
    }
}

/// Parameter tables for every named model; all overridable.
#[derive(Debug, Clone, PartialEq)]
pub struct ClickModelTables {
    pub perfect: CascadeModel,
    pub navigational: CascadeModel,
    pub informational: CascadeModel,
    pub random_click_probability: f64,
}

impl Default for ClickModelTables {
    fn default() -> Self {
        Self {
            perfect: CascadeModel::perfect(),
            navigational: CascadeModel::navigational(),
            informational: CascadeModel::informational(),
            random_click_probability: DEFAULT_RANDOM_CLICK_PROBABILITY,
        }
    }
}

impl ClickModelTables {
    pub fn resolve(&self, name: ClickModelName) -> ClickModel {
        match name {
            ClickModelName::Perfect => ClickModel::Cascade(self.perfect.clone()),
            ClickModelName::Navigational => ClickModel::Cascade(self.navigational.clone()),
            ClickModelName::Informational => ClickModel::Cascade(self.informational.clone()),
            ClickModelName::Random => ClickModel::Random {
                click_probability: self.random_click_probability,
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.perfect.validate()?;
        self.navigational.validate()?;
        self.informational.validate()?;
        if !(0.0..=1.0).contains(&self.random_click_probability) {
            return Err(Error::InvalidConfig(format!(
                "random click probability {} outside [0, 1]",
                self.random_click_probability
            )));
        }
        Ok(())
    }
}

/// One cascade user session over `ml`.
pub fn simulate_clicks<G, R>(
    ml: &MultileavedList,
    relevance: &G,
    model: &CascadeModel,
    rng: &mut R,
) -> Result<ClickSet>
where
    G: GradeLookup + ?Sized,
    R: Rng + ?Sized,
{
    let mut clicked = Vec::new();
    for (position, &doc) in ml.documents().iter().enumerate() {
        let grade = relevance.grade(doc).ok_or(Error::MissingGrade(doc.0))? as usize;
        if grade >= model.p_click.len() {
            return Err(Error::InvalidConfig(format!(
                "grade {grade} of document {doc} exceeds click model maximum {}",
                model.max_grade()
            )));
        }
        if rng.random::<f64>() < model.p_click[grade] {
            clicked.push(position);
            if rng.random::<f64>() < model.p_stop[grade] {
                break;
            }
        }
    }
    ClickSet::for_length(ml.len(), clicked)
}

/// Clicks every position independently with `click_probability`.
pub fn random_clicks<R: Rng + ?Sized>(
    ml: &MultileavedList,
    click_probability: f64,
    rng: &mut R,
) -> Result<ClickSet> {
    let clicked: Vec<usize> = (0..ml.len())
        .filter(|_| rng.random::<f64>() < click_probability)
        .collect();
    ClickSet::for_length(ml.len(), clicked)
}
