use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

use super::{positions_in, validate_rankings, MultileaveConfig, PmCreditMode, RankWeights};
use crate::{ClickSet, CreditVector, DocumentId, Error, MultileavedList, RankedList, Result};

/// Probability that `ranking` draws `doc` once the `removed` documents are gone.
///
/// Ranks are recomputed over the remaining documents; the draw is a softmax
/// over `rank^-exponent`. Returns 0 for a document the ranking does not hold
/// or that has already been removed.
pub fn pm_doc_probability(
    ranking: &RankedList,
    removed: &HashSet<DocumentId>,
    doc: DocumentId,
    config: &MultileaveConfig,
) -> Result<f64> {
    let remaining: Vec<DocumentId> = ranking
        .documents()
        .iter()
        .copied()
        .filter(|d| !removed.contains(d))
        .collect();
    if remaining.is_empty() {
        return Err(Error::RankingExhausted);
    }
    let Some(pos) = remaining.iter().position(|&d| d == doc) else {
        return Ok(0.0);
    };
    let weights = RankWeights::new(config.exponent, remaining.len());
    Ok(weights.weight(pos + 1) / weights.normalizer(remaining.len()))
}

/// Probabilistic multileave.
///
/// Rounds with a fresh random ranker order; each ranker in turn samples one
/// of its remaining documents by rank softmax, and the sampled document is
/// removed from every ranker. The output carries no team labels.
pub fn pm_multileave<R: Rng + ?Sized>(
    rankings: &[RankedList],
    config: &MultileaveConfig,
    rng: &mut R,
) -> Result<MultileavedList> {
    config.validate()?;
    let target = validate_rankings(rankings)?.min(config.length);
    let max_len = rankings.iter().map(RankedList::len).max().unwrap_or(0);
    let weights = RankWeights::new(config.exponent, max_len);

    let mut documents: Vec<DocumentId> = Vec::with_capacity(target);
    let mut order: Vec<usize> = (0..rankings.len()).collect();
    while documents.len() < target {
        order.shuffle(rng);
        for &j in &order {
            if documents.len() == target {
                break;
            }
            if let Some(d) = draw(rankings[j].documents(), &documents, &weights, rng) {
                documents.push(d);
            }
        }
    }
    MultileavedList::new(documents)
}

fn draw<R: Rng + ?Sized>(
    list: &[DocumentId],
    chosen: &[DocumentId],
    weights: &RankWeights,
    rng: &mut R,
) -> Option<DocumentId> {
    let remaining = list.iter().filter(|d| !chosen.contains(d)).count();
    if remaining == 0 {
        return None;
    }
    let u = rng.random::<f64>() * weights.normalizer(remaining);
    let mut acc = 0.0;
    let mut rank = 0;
    let mut last = None;
    for d in list.iter().filter(|d| !chosen.contains(d)) {
        rank += 1;
        acc += weights.weight(rank);
        last = Some(*d);
        if u < acc {
            break;
        }
    }
    last
}

/// Posterior over rankers for each clicked position.
///
/// Given the documents shown above it, position `r`'s document was drawn by
/// ranker `j` with probability proportional to `P(d_r | R_j, prefix)`; the
/// uniform ranker prior cancels. Rows are uniform when no ranker could have
/// drawn the document.
fn click_posteriors(
    rankings: &[RankedList],
    ml: &MultileavedList,
    clicks: &ClickSet,
    config: &MultileaveConfig,
) -> Result<Vec<Vec<f64>>> {
    config.validate()?;
    if rankings.is_empty() {
        return Err(Error::NoRankers);
    }
    if ml.is_empty() {
        return Err(Error::EmptyMultileaving);
    }
    clicks.check_against(ml)?;
    let max_len = rankings.iter().map(RankedList::len).max().unwrap_or(0);
    let weights = RankWeights::new(config.exponent, max_len);
    let positions: Vec<Vec<Option<usize>>> = rankings
        .iter()
        .map(|r| positions_in(r.documents(), ml.documents()))
        .collect();

    let k = rankings.len();
    let rows = clicks
        .positions()
        .iter()
        .map(|&r| {
            let mut row: Vec<f64> = positions
                .iter()
                .zip(rankings)
                .map(|(pos, ranking)| draw_probability(pos, ranking.len(), r, &weights))
                .collect();
            let total: f64 = row.iter().sum();
            if total > 0.0 {
                row.iter_mut().for_each(|p| *p /= total);
            } else {
                row.fill(1.0 / k as f64);
            }
            row
        })
        .collect();
    Ok(rows)
}

/// `P(d_r | R_j, d_1..d_{r-1} removed)` from the ranker's positions of the shown documents.
fn draw_probability(pos: &[Option<usize>], len: usize, r: usize, weights: &RankWeights) -> f64 {
    let Some(p) = pos[r] else {
        return 0.0;
    };
    let earlier = pos[..r].iter().flatten();
    let removed = earlier.clone().count();
    let removed_above = earlier.filter(|&&q| q < p).count();
    weights.weight(p + 1 - removed_above) / weights.normalizer(len - removed)
}

/// Expected number of clicked documents assigned to each ranker, marginalized
/// over all assignments weighted by their probability given the list. The
/// credits sum to the number of clicks.
pub fn pm_credits_exact(
    rankings: &[RankedList],
    ml: &MultileavedList,
    clicks: &ClickSet,
    config: &MultileaveConfig,
) -> Result<CreditVector> {
    let rows = click_posteriors(rankings, ml, clicks, config)?;
    let mut credit = vec![0.0; rankings.len()];
    for row in &rows {
        for (c, q) in credit.iter_mut().zip(row) {
            *c += q;
        }
    }
    Ok(CreditVector::from_raw(credit))
}

/// Monte Carlo estimate of [`pm_credits_exact`] from `samples` sampled assignments.
///
/// Positions are independent given the list, so the number of samples that
/// assign a clicked position to each ranker is multinomial; it is drawn
/// directly as a chain of binomials instead of one assignment at a time.
pub fn pm_credits_sampled<R: Rng + ?Sized>(
    rankings: &[RankedList],
    ml: &MultileavedList,
    clicks: &ClickSet,
    samples: usize,
    config: &MultileaveConfig,
    rng: &mut R,
) -> Result<CreditVector> {
    if samples == 0 {
        return Err(Error::InvalidConfig(
            "PM sample count must be at least 1".into(),
        ));
    }
    let rows = click_posteriors(rankings, ml, clicks, config)?;
    let mut counts = vec![0u64; rankings.len()];
    for row in &rows {
        multinomial_into(samples as u64, row, &mut counts, rng);
    }
    let credit = counts
        .into_iter()
        .map(|c| c as f64 / samples as f64)
        .collect();
    Ok(CreditVector::from_raw(credit))
}

fn multinomial_into<R: Rng + ?Sized>(n: u64, probs: &[f64], counts: &mut [u64], rng: &mut R) {
    let mut left = n;
    let mut mass = 1.0;
    let last = probs.len() - 1;
    for (j, &p) in probs.iter().enumerate() {
        if left == 0 {
            break;
        }
        let drawn = if j == last || mass <= p {
            left
        } else {
            let share = (p / mass).clamp(0.0, 1.0);
            Binomial::new(left, share)
                .expect("share lies in [0, 1]")
                .sample(rng)
        };
        counts[j] += drawn;
        left -= drawn;
        mass -= p;
    }
}

/// PM credit in the mode selected by `config`.
pub fn pm_credits<R: Rng + ?Sized>(
    rankings: &[RankedList],
    ml: &MultileavedList,
    clicks: &ClickSet,
    config: &MultileaveConfig,
    rng: &mut R,
) -> Result<CreditVector> {
    match config.pm_mode {
        PmCreditMode::Exact => pm_credits_exact(rankings, ml, clicks, config),
        PmCreditMode::Sampled => {
            pm_credits_sampled(rankings, ml, clicks, config.pm_samples, config, rng)
        }
    }
}
