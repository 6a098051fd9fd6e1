//! Fixtures shared by the benchmarks.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use multileave::{DocumentId, QueryId, RankedList};

/// `k` independent random orderings of the same `docs` documents.
pub fn random_rankings(k: usize, docs: u32, seed: u64) -> Vec<RankedList> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k)
        .map(|_| {
            let mut ids: Vec<DocumentId> = (0..docs).map(DocumentId).collect();
            ids.shuffle(&mut rng);
            RankedList::new(QueryId(1), ids).expect("distinct ids")
        })
        .collect()
}
