use rand::seq::SliceRandom;
use rand::Rng;

use super::{validate_rankings, MultileaveConfig};
use crate::{ClickSet, CreditVector, DocumentId, Error, MultileavedList, RankedList, Result};

/// Team Draft multileave.
///
/// Each round shuffles the rankers; in that order every ranker appends its
/// highest ranked document that is not yet in the list and is recorded as
/// that document's team. Rankers with nothing left to contribute sit the
/// round out. Stops at `min(length, distinct documents)`.
pub fn team_draft_multileave<R: Rng + ?Sized>(
    rankings: &[RankedList],
    config: &MultileaveConfig,
    rng: &mut R,
) -> Result<MultileavedList> {
    config.validate()?;
    let target = validate_rankings(rankings)?.min(config.length);

    let mut documents: Vec<DocumentId> = Vec::with_capacity(target);
    let mut teams = Vec::with_capacity(target);
    let mut cursors = vec![0usize; rankings.len()];
    let mut order: Vec<usize> = (0..rankings.len()).collect();

    while documents.len() < target {
        order.shuffle(rng);
        for &j in &order {
            if documents.len() == target {
                break;
            }
            let list = rankings[j].documents();
            let cursor = &mut cursors[j];
            while *cursor < list.len() && documents.contains(&list[*cursor]) {
                *cursor += 1;
            }
            if let Some(&d) = list.get(*cursor) {
                documents.push(d);
                teams.push(j);
                *cursor += 1;
            }
        }
    }
    MultileavedList::with_teams(documents, teams, rankings.len())
}

/// One unit of credit per click, to the ranker that contributed the clicked document.
pub fn tdm_credits(
    ml: &MultileavedList,
    clicks: &ClickSet,
    num_rankers: usize,
) -> Result<CreditVector> {
    let teams = ml.teams().ok_or(Error::MissingTeams)?;
    clicks.check_against(ml)?;
    let mut credit = vec![0.0; num_rankers];
    for &p in clicks.positions() {
        let team = teams[p];
        if team >= num_rankers {
            return Err(Error::TeamOutOfRange { team, num_rankers });
        }
        credit[team] += 1.0;
    }
    Ok(CreditVector::from_raw(credit))
}
