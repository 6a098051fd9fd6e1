use rand::Rng;

use super::{positions_in, team_draft_multileave, MultileaveConfig, RankWeights};
use crate::{ClickSet, CreditVector, Error, MultileavedList, RankedList, Result};

/// SOSM builds its list exactly as Team Draft does; the team labels are kept
/// but not used for credit.
pub fn sosm_multileave<R: Rng + ?Sized>(
    rankings: &[RankedList],
    config: &MultileaveConfig,
    rng: &mut R,
) -> Result<MultileavedList> {
    team_draft_multileave(rankings, config, rng)
}

/// Sample-only scoring.
///
/// Each ranker re-ranks just the shown documents by its own order, and a
/// clicked document earns it `rank^-exponent` normalized over the shown
/// documents only. Shown documents a ranker never retrieved sort below the
/// ones it did, in list order.
pub fn sosm_credits(
    rankings: &[RankedList],
    ml: &MultileavedList,
    clicks: &ClickSet,
    config: &MultileaveConfig,
) -> Result<CreditVector> {
    config.validate()?;
    if rankings.is_empty() {
        return Err(Error::NoRankers);
    }
    if ml.is_empty() {
        return Err(Error::EmptyMultileaving);
    }
    clicks.check_against(ml)?;
    let shown = ml.len();
    let weights = RankWeights::new(config.exponent, shown);
    let normalizer = weights.normalizer(shown);

    let mut order: Vec<usize> = Vec::with_capacity(shown);
    let mut rank_of_position = vec![0usize; shown];
    let credit = rankings
        .iter()
        .map(|ranking| {
            let pos = positions_in(ranking.documents(), ml.documents());
            order.clear();
            order.extend(0..shown);
            order.sort_unstable_by_key(|&r| pos[r].unwrap_or(usize::MAX - shown + r));
            for (rank0, &r) in order.iter().enumerate() {
                rank_of_position[r] = rank0 + 1;
            }
            clicks
                .positions()
                .iter()
                .map(|&r| weights.weight(rank_of_position[r]) / normalizer)
                .sum()
        })
        .collect();
    Ok(CreditVector::from_raw(credit))
}
