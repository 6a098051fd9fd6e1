//! Simulation laboratory for multileaved online ranker evaluation.
//!
//! A multileaving merges the result lists of many rankers into one
//! presented list; clicks on that list are turned into per-ranker credit and
//! from there into a matrix of pairwise preferences. This crate provides:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`types`], [`preference`] | documents, lists, clicks, credits, preference matrices |
//! | [`multileaving`] | Team Draft (TDM), Probabilistic (PM) and Sample-only Scored (SOSM) multileave |
//! | [`clicks`] | cascade and random click models |
//! | [`dataset`] | learning-to-rank parsing, feature rankers, NDCG@k, synthetic data |
//! | [`harness`] | experiment runner, preference error curves, CSV output |
//!
//! ```rust
//! use multileave::{DocumentId, QueryId, RankedList, ClickSet};
//! use multileave::multileaving::{sosm_credits, sosm_multileave, MultileaveConfig};
//! use rand::SeedableRng;
//!
//! let q = QueryId(1);
//! let d = |i| DocumentId(i);
//! let rankings = vec![
//!     RankedList::new(q, vec![d(1), d(2), d(3)]).unwrap(),
//!     RankedList::new(q, vec![d(3), d(2), d(1)]).unwrap(),
//! ];
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let config = MultileaveConfig::default();
//! let ml = sosm_multileave(&rankings, &config, &mut rng).unwrap();
//! let clicks = ClickSet::new(&ml, [0]).unwrap();
//! let credits = sosm_credits(&rankings, &ml, &clicks, &config).unwrap();
//! assert_eq!(credits.len(), 2);
//! ```

pub mod clicks;
pub mod dataset;
pub mod error;
pub mod harness;
pub mod multileaving;
pub mod preference;
pub mod rng;
pub mod types;

pub use error::{Error, Result};
pub use preference::{
    preferences_from_credits, running_mean_update, PreferenceMatrix, PreferenceTally,
};
pub use types::{ClickSet, CreditVector, DocumentId, MultileavedList, QueryId, RankedList};
