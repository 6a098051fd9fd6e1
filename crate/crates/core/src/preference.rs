//! Pairwise preference matrices.
//!
//! Entry `(i, j)` is 1 when ranker `i` is preferred over ranker `j`, 0 for the
//! reverse and 0.5 for no preference. The same type holds per-interaction
//! outcomes, running means over interactions and ground truth. The diagonal
//! is always 0.5 and never counted by any error measure.

use crate::{CreditVector, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PreferenceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl PreferenceMatrix {
    /// All pairs tied.
    pub fn indifferent(n: usize) -> Self {
        Self {
            n,
            values: vec![0.5; n * n],
        }
    }

    /// Builds a matrix from a pairwise outcome function evaluated for `i < j`;
    /// the lower triangle is filled as `1 - value`.
    pub fn from_upper(n: usize, mut outcome: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::indifferent(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = outcome(i, j);
                m.values[i * n + j] = v;
                m.values[j * n + i] = 1.0 - v;
            }
        }
        m
    }

    /// Builds a matrix from explicit rows. Only shape is checked.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(Self {
            n,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    /// Iterates over ordered off-diagonal pairs `(i, j, value)`.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| {
            (0..n)
                .filter(move |&j| j != i)
                .map(move |j| (i, j, self.values[i * n + j]))
        })
    }

    /// Relabels rankers: entry `(perm[i], perm[j])` of the result is entry `(i, j)` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must match matrix size"
        );
        let mut out = Self::indifferent(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.values[perm[i] * self.n + perm[j]] = self.values[i * self.n + j];
            }
        }
        out
    }
}

/// Per-interaction preference matrix from credits.
///
/// Ties are decided by exact floating point equality: structurally identical
/// rankings produce bit-identical credits and must register as 0.5.
pub fn preferences_from_credits(credits: &CreditVector) -> PreferenceMatrix {
    let c = credits.as_slice();
    PreferenceMatrix::from_upper(c.len(), |i, j| compare(c[i], c[j]))
}

fn compare(a: f64, b: f64) -> f64 {
    if a > b {
        1.0
    } else if a < b {
        0.0
    } else {
        0.5
    }
}

/// Folds the `t`-th sample into a running mean over the first `t - 1` samples.
pub fn running_mean_update(
    mean: &PreferenceMatrix,
    sample: &PreferenceMatrix,
    t: u64,
) -> Result<PreferenceMatrix> {
    if t == 0 {
        return Err(Error::ZeroCount);
    }
    if mean.n != sample.n {
        return Err(Error::DimensionMismatch {
            left: mean.n,
            right: sample.n,
        });
    }
    let scale = 1.0 / t as f64;
    let values = mean
        .values
        .iter()
        .zip(&sample.values)
        .map(|(m, s)| m + (s - m) * scale)
        .collect();
    Ok(PreferenceMatrix { n: mean.n, values })
}

/// Exact running mean of per-interaction outcomes.
///
/// Outcomes are multiples of one half, so they are tallied as integers; the
/// mean is then exact and a pair that is tied on average compares equal to 0.5
/// without rounding noise.
#[derive(Debug, Clone)]
pub struct PreferenceTally {
    n: usize,
    // half-points won by i over j, upper triangle only
    half_wins: Vec<u64>,
    count: u64,
}

impl PreferenceTally {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            half_wins: vec![0; n * n],
            count: 0,
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn record_credits(&mut self, credits: &CreditVector) {
        let c = credits.as_slice();
        assert_eq!(
            c.len(),
            self.n,
            "credit vector length must match tally size"
        );
        for i in 0..self.n {
            for j in i + 1..self.n {
                self.half_wins[i * self.n + j] += (compare(c[i], c[j]) * 2.0) as u64;
            }
        }
        self.count += 1;
    }

    /// Records a per-interaction matrix whose entries lie in {0, 0.5, 1}.
    pub fn record(&mut self, sample: &PreferenceMatrix) -> Result<()> {
        if sample.n != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: sample.n,
            });
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = sample.get(i, j);
                if !(v == 0.0 || v == 0.5 || v == 1.0) {
                    return Err(Error::InvalidConfig(format!(
                        "per-interaction outcome {v} is not 0, 0.5 or 1"
                    )));
                }
                self.half_wins[i * self.n + j] += (v * 2.0) as u64;
            }
        }
        self.count += 1;
        Ok(())
    }

    /// Mean preference matrix; all 0.5 before the first record.
    pub fn mean(&self) -> PreferenceMatrix {
        if self.count == 0 {
            return PreferenceMatrix::indifferent(self.n);
        }
        let denom = 2.0 * self.count as f64;
        PreferenceMatrix::from_upper(self.n, |i, j| self.half_wins[i * self.n + j] as f64 / denom)
    }
}
