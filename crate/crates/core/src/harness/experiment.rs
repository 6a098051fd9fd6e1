use std::fmt;

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::metrics::{bias_error_rate, error_rate};
use crate::clicks::ClickModel;
use crate::dataset::{
    ground_truth_matrix, ndcg_at_k, preferences_from_scores, ranking_for, split_queries, Dataset,
    FeatureRanker, Query, QuerySplit, NDCG_CUTOFF, NDCG_TIE_TOLERANCE,
};
use crate::multileaving::Method;
use crate::rng::{substream, Role, SimRng};
use crate::{Error, PreferenceMatrix, PreferenceTally, RankedList, Result};

/// Random-stream slot for per-run draws that belong to no method.
const HARNESS_SLOT: u8 = 0xff;

/// One line of an error plot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    Method(Method),
    /// Preferences from mean NDCG@10 over the training queries used so far.
    NdcgBaseline,
}

impl Series {
    pub fn name(self) -> &'static str {
        match self {
            Series::Method(m) => m.name(),
            Series::NdcgBaseline => "ndcg-baseline",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCurve {
    pub run: u32,
    pub series: Series,
    /// `(iteration, error)` at each logged iteration, iterations increasing.
    pub points: Vec<(u64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    /// Ordered by run, then series.
    pub curves: Vec<ErrorCurve>,
}

/// Every iteration up to 100, then every 100th, plus the last one.
pub fn is_logged(t: u64, total: u64) -> bool {
    t <= 100 || t.is_multiple_of(100) || t == total
}

/// Loads the configured dataset and runs the experiment.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    config.validate()?;
    let ds = config.dataset.load(config.max_grade)?;
    run_on_dataset(config, &ds)
}

/// Runs the experiment on an already loaded dataset. Runs execute in
/// parallel; results depend only on the configuration and seed.
pub fn run_on_dataset(config: &ExperimentConfig, ds: &Dataset) -> Result<ExperimentResult> {
    config.validate()?;
    if config.rankers > ds.num_features() {
        return Err(Error::TooManyRankers {
            requested: config.rankers,
            available: ds.num_features(),
        });
    }
    let split = if config.train_equals_test {
        let all: Vec<_> = ds.query_ids().collect();
        QuerySplit {
            train: all.clone(),
            test: all,
        }
    } else {
        let seed =
            rand::RngCore::next_u64(&mut substream(config.seed, 0, HARNESS_SLOT, Role::Split));
        split_queries(ds, config.train_fraction, seed)?
    };
    let train: Vec<&Query> = split
        .train
        .iter()
        .map(|&q| ds.query(q))
        .collect::<Result<_>>()?;

    let per_run = (0..config.runs)
        .into_par_iter()
        .map(|run| simulate_run(config, ds, &split, &train, run))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentResult {
        curves: per_run.into_iter().flatten().collect(),
    })
}

struct Prepared {
    rankings: Vec<RankedList>,
    ndcg: Vec<f64>,
}

struct MethodState {
    method: Method,
    construction: SimRng,
    clicks: SimRng,
    credit: SimRng,
    tally: PreferenceTally,
    points: Vec<(u64, f64)>,
}

fn simulate_run(
    config: &ExperimentConfig,
    ds: &Dataset,
    split: &QuerySplit,
    train: &[&Query],
    run: u32,
) -> Result<Vec<ErrorCurve>> {
    let k = config.rankers;
    let mut sampling = substream(config.seed, run, HARNESS_SLOT, Role::Sampling);
    let mut picked = index::sample(&mut sampling, ds.num_features(), k).into_vec();
    picked.sort_unstable();
    let rankers: Vec<FeatureRanker> = picked.into_iter().map(FeatureRanker).collect();

    let truth = if config.bias {
        None
    } else {
        Some(ground_truth_matrix(ds, &rankers, &split.test)?)
    };
    let score = |mean: &PreferenceMatrix| match &truth {
        Some(p) => error_rate(mean, p),
        None => bias_error_rate(mean, config.bias_epsilon),
    };

    let click_model: ClickModel = config.click_model();
    let mut states: Vec<MethodState> = config
        .methods
        .iter()
        .map(|&method| MethodState {
            method,
            construction: substream(config.seed, run, method.slot(), Role::Construction),
            clicks: substream(config.seed, run, method.slot(), Role::Clicks),
            credit: substream(config.seed, run, method.slot(), Role::Credit),
            tally: PreferenceTally::new(k),
            points: Vec::new(),
        })
        .collect();

    let mut cache: Vec<Option<Prepared>> = (0..train.len()).map(|_| None).collect();
    let mut seen = vec![false; train.len()];
    let mut ndcg_sums = vec![0.0; k];
    let mut distinct_seen = 0usize;
    let mut baseline = Vec::new();

    for t in 1..=config.iterations {
        let qi = sampling.random_range(0..train.len());
        let query = train[qi];
        if cache[qi].is_none() {
            cache[qi] = Some(prepare(query, &rankers, ds.num_features())?);
        }
        let prepared = cache[qi].as_ref().expect("prepared above");
        let logged = is_logged(t, config.iterations);

        for st in &mut states {
            let ml = st.method.multileave(
                &prepared.rankings,
                &config.multileave,
                &mut st.construction,
            )?;
            let clicks = click_model.simulate(&ml, query, &mut st.clicks)?;
            let credits = st.method.credit(
                &prepared.rankings,
                &ml,
                &clicks,
                &config.multileave,
                &mut st.credit,
            )?;
            st.tally.record_credits(&credits);
            if logged {
                st.points.push((t, score(&st.tally.mean())?));
            }
        }

        if !seen[qi] {
            seen[qi] = true;
            distinct_seen += 1;
            for (sum, v) in ndcg_sums.iter_mut().zip(&prepared.ndcg) {
                *sum += v;
            }
        }
        if logged {
            if let Some(p) = &truth {
                let means: Vec<f64> = ndcg_sums.iter().map(|s| s / distinct_seen as f64).collect();
                baseline.push((
                    t,
                    error_rate(&preferences_from_scores(&means, NDCG_TIE_TOLERANCE), p)?,
                ));
            }
        }
    }

    let mut curves: Vec<ErrorCurve> = states
        .into_iter()
        .map(|st| ErrorCurve {
            run,
            series: Series::Method(st.method),
            points: st.points,
        })
        .collect();
    if truth.is_some() {
        curves.push(ErrorCurve {
            run,
            series: Series::NdcgBaseline,
            points: baseline,
        });
    }
    curves.sort_by_key(|c| c.series);
    Ok(curves)
}

fn prepare(query: &Query, rankers: &[FeatureRanker], num_features: usize) -> Result<Prepared> {
    let rankings = rankers
        .iter()
        .map(|&r| ranking_for(query, r, num_features))
        .collect::<Result<Vec<_>>>()?;
    let ndcg = rankings
        .iter()
        .map(|r| ndcg_at_k(r, query, NDCG_CUTOFF))
        .collect::<Result<Vec<_>>>()?;
    Ok(Prepared { rankings, ndcg })
}

/// Final-iteration error of one series, aggregated over runs.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSummary {
    pub series: Series,
    pub iteration: u64,
    pub runs: usize,
    pub mean: f64,
    /// Sample standard deviation; 0 for a single run.
    pub std_dev: f64,
}

pub fn summarize(result: &ExperimentResult) -> Vec<SeriesSummary> {
    let mut series: Vec<Series> = result.curves.iter().map(|c| c.series).collect();
    series.sort();
    series.dedup();
    series
        .into_iter()
        .filter_map(|s| {
            let finals: Vec<(u64, f64)> = result
                .curves
                .iter()
                .filter(|c| c.series == s)
                .filter_map(|c| c.points.last().copied())
                .collect();
            let n = finals.len();
            if n == 0 {
                return None;
            }
            let mean = finals.iter().map(|p| p.1).sum::<f64>() / n as f64;
            let var = if n > 1 {
                finals.iter().map(|p| (p.1 - mean).powi(2)).sum::<f64>() / (n - 1) as f64
            } else {
                0.0
            };
            let iteration = finals.iter().map(|p| p.0).max().unwrap_or(0);
            Some(SeriesSummary {
                series: s,
                iteration,
                runs: n,
                mean,
                std_dev: var.sqrt(),
            })
        })
        .collect()
}
