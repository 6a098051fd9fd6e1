use crate::clicks::GradeLookup;
use crate::{Error, RankedList, Result};

pub const NDCG_CUTOFF: usize = 10;

fn gain(grade: u8) -> f64 {
    2f64.powi(grade as i32) - 1.0
}

fn dcg(grades: impl Iterator<Item = u8>, k: usize) -> f64 {
    grades
        .take(k)
        .enumerate()
        .map(|(i, g)| gain(g) / ((i + 2) as f64).log2())
        .sum()
}

/// NDCG@k with `2^grade - 1` gains and `log2(rank + 1)` discounts.
///
/// The ideal ordering sorts the ranked documents' grades. A list with no
/// relevant document scores 0.
pub fn ndcg_at_k<G: GradeLookup + ?Sized>(
    ranking: &RankedList,
    relevance: &G,
    k: usize,
) -> Result<f64> {
    let grades = ranking
        .documents()
        .iter()
        .map(|&d| relevance.grade(d).ok_or(Error::MissingGrade(d.0)))
        .collect::<Result<Vec<u8>>>()?;
    let mut ideal = grades.clone();
    ideal.sort_unstable_by(|a, b| b.cmp(a));
    let ideal_dcg = dcg(ideal.into_iter(), k);
    if ideal_dcg == 0.0 {
        return Ok(0.0);
    }
    Ok(dcg(grades.into_iter(), k) / ideal_dcg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{DocumentId, QueryId};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn identity(n: u32) -> RankedList {
        RankedList::new(QueryId(0), (0..n).map(DocumentId).collect()).unwrap()
    }

    #[test]
    fn ideal_order_scores_one() {
        let grades = vec![4u8, 3, 3, 1, 0];
        assert_abs_diff_eq!(
            ndcg_at_k(&identity(5), &grades, 10).unwrap(),
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn no_relevant_documents_scores_zero() {
        assert_eq!(ndcg_at_k(&identity(4), &vec![0u8; 4], 10).unwrap(), 0.0);
    }

    #[test]
    fn relevant_document_second() {
        // (0 + 15 / log2 3) / 15
        let v = ndcg_at_k(&identity(2), &vec![0u8, 4], 10).unwrap();
        assert_abs_diff_eq!(v, 1.0 / 3f64.log2(), epsilon = 1e-15);
        assert_abs_diff_eq!(v, 0.6309, epsilon = 1e-4);
    }

    #[test]
    fn cutoff_ignores_the_tail() {
        let mut grades = vec![0u8; 12];
        grades[11] = 4;
        assert_eq!(ndcg_at_k(&identity(12), &grades, 10).unwrap(), 0.0);
    }

    #[test]
    fn missing_grade_is_an_error() {
        assert!(matches!(
            ndcg_at_k(&identity(3), &vec![1u8, 2], 10),
            Err(Error::MissingGrade(2))
        ));
    }

    proptest! {
        #[test]
        fn bounded_and_one_exactly_for_grade_sorted_prefixes(grades in prop::collection::vec(0u8..5, 1..25)) {
            let n = grades.len() as u32;
            let v = ndcg_at_k(&identity(n), &grades, 10).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&v));
            let mut sorted = grades.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let prefix_ideal = grades.iter().take(10).eq(sorted.iter().take(10));
            let any_relevant = grades.iter().any(|&g| g > 0);
            if any_relevant {
                prop_assert_eq!((v - 1.0).abs() < 1e-12, prefix_ideal);
            } else {
                prop_assert_eq!(v, 0.0);
            }
        }
    }
}
