use crate::{Error, PreferenceMatrix, Result};

/// Deviation from 0.5 tolerated before a pair counts as biased.
pub const DEFAULT_BIAS_EPSILON: f64 = 0.03;

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Fraction of ordered ranker pairs whose inferred preference direction
/// (win, loss or tie relative to 0.5) differs from the ground truth's.
pub fn error_rate(mean: &PreferenceMatrix, truth: &PreferenceMatrix) -> Result<f64> {
    if mean.size() != truth.size() {
        return Err(Error::DimensionMismatch {
            left: mean.size(),
            right: truth.size(),
        });
    }
    let n = mean.size();
    if n < 2 {
        return Ok(0.0);
    }
    let wrong = mean
        .off_diagonal()
        .filter(|&(i, j, m)| sign(m - 0.5) != sign(truth.get(i, j) - 0.5))
        .count();
    Ok(wrong as f64 / (n * (n - 1)) as f64)
}

/// Fraction of ordered ranker pairs whose mean preference strays more than
/// `epsilon` from 0.5.
pub fn bias_error_rate(mean: &PreferenceMatrix, epsilon: f64) -> Result<f64> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "bias epsilon {epsilon} must be positive"
        )));
    }
    let n = mean.size();
    if n < 2 {
        return Ok(0.0);
    }
    let biased = mean
        .off_diagonal()
        .filter(|&(_, _, m)| (m - 0.5).abs() > epsilon)
        .count();
    Ok(biased as f64 / (n * (n - 1)) as f64)
}
