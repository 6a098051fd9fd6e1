use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Parser;

use multileave::clicks::ClickModelName;
use multileave::dataset::write_letor_file;
use multileave::harness::{
    parse_methods, parse_synthetic, run_experiment, summarize, write_csv, DatasetSource,
    ExperimentConfig,
};
use multileave::multileaving::PmCreditMode;

/// Simulated online comparison of rankers by multileaving (TDM, PM, SOSM).
///
/// Settings are taken from the defaults, then the `--config` file, then the
/// remaining flags.
#[derive(Debug, Parser)]
#[command(name = "multileave", version)]
struct Args {
    /// TOML file overriding the defaults, including click model tables.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Learning-to-rank file (`<grade> qid:<id> <fid>:<value> ...`).
    #[arg(long, value_name = "PATH", conflicts_with = "synthetic")]
    dataset: Option<PathBuf>,

    /// Synthetic dataset as queries,docs,features.
    #[arg(long, value_name = "Q,D,F")]
    synthetic: Option<String>,

    /// Comma separated subset of tdm,pm,sosm.
    #[arg(long)]
    methods: Option<String>,

    /// Number of feature rankers compared per run.
    #[arg(long, value_name = "K")]
    rankers: Option<usize>,

    #[arg(long, value_name = "T")]
    iterations: Option<u64>,

    #[arg(long, value_name = "N")]
    runs: Option<u32>,

    /// perfect, navigational, informational or random.
    #[arg(long)]
    click_model: Option<ClickModelName>,

    /// exact or sampled.
    #[arg(long)]
    pm_mode: Option<PmCreditMode>,

    /// Assignments sampled per interaction in sampled PM mode.
    #[arg(long)]
    pm_samples: Option<usize>,

    /// Presented list length.
    #[arg(long)]
    length: Option<usize>,

    /// Score deviation from "no preference" instead of NDCG ground truth.
    #[arg(long)]
    bias: bool,

    #[arg(long, value_name = "EPS")]
    bias_epsilon: Option<f64>,

    #[arg(long, value_name = "FRACTION")]
    train_fraction: Option<f64>,

    /// Evaluate ground truth on the training queries themselves.
    #[arg(long)]
    train_equals_test: bool,

    /// Highest relevance grade accepted when reading a dataset.
    #[arg(long)]
    max_grade: Option<u8>,

    #[arg(long)]
    seed: Option<u64>,

    /// Results CSV.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Write the loaded dataset in learning-to-rank format and exit.
    #[arg(long, value_name = "PATH")]
    export_dataset: Option<PathBuf>,

    /// Suppress the summary table.
    #[arg(long, short)]
    quiet: bool,
}

fn build_config(args: &Args) -> Result<ExperimentConfig> {
    let mut config = ExperimentConfig::default();
    if let Some(path) = &args.config {
        config
            .apply_file(path)
            .with_context(|| format!("reading config {}", path.display()))?;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
        if let DatasetSource::Synthetic(spec) = &mut config.dataset {
            spec.seed = seed;
        }
    }
    if let Some(path) = &args.dataset {
        config.dataset = DatasetSource::File(path.clone());
    }
    if let Some(s) = &args.synthetic {
        config.dataset = DatasetSource::Synthetic(parse_synthetic(s, config.seed)?);
    }
    if let Some(m) = &args.methods {
        config.methods = parse_methods(m)?;
    }
    if let Some(v) = args.rankers {
        config.rankers = v;
    }
    if let Some(v) = args.iterations {
        config.iterations = v;
    }
    if let Some(v) = args.runs {
        config.runs = v;
    }
    if let Some(v) = args.click_model {
        config.click_model = v;
    }
    if let Some(v) = args.pm_mode {
        config.multileave.pm_mode = v;
    }
    if let Some(v) = args.pm_samples {
        config.multileave.pm_samples = v;
    }
    if let Some(v) = args.length {
        config.multileave.length = v;
    }
    if args.bias {
        config.bias = true;
    }
    if let Some(v) = args.bias_epsilon {
        config.bias_epsilon = v;
    }
    if let Some(v) = args.train_fraction {
        config.train_fraction = v;
    }
    if args.train_equals_test {
        config.train_equals_test = true;
    }
    if let Some(v) = args.max_grade {
        config.max_grade = v;
    }
    if let Some(v) = &args.out {
        config.output = v.clone();
    }
    config.validate()?;
    Ok(config)
}

fn main() -> Result<()> {
    let args = Args::parse();
    let config = build_config(&args)?;

    if let Some(path) = &args.export_dataset {
        let ds = config.dataset.load(config.max_grade)?;
        write_letor_file(&ds, path)?;
        if !args.quiet {
            eprintln!(
                "wrote {} queries, {} documents to {}",
                ds.queries().len(),
                ds.num_documents(),
                path.display()
            );
        }
        return Ok(());
    }

    let start = Instant::now();
    let result = run_experiment(&config)?;
    if result.curves.is_empty() {
        bail!("experiment produced no curves");
    }
    write_csv(&result, &config.output)?;

    if !args.quiet {
        let what = if config.bias { "bias error" } else { "error" };
        println!(
            "{} rankers, {} iterations, {} runs, {} clicks ({:.1}s) -> {}",
            config.rankers,
            config.iterations,
            config.runs,
            config.click_model,
            start.elapsed().as_secs_f64(),
            config.output.display()
        );
        for s in summarize(&result) {
            println!(
                "  {:<14} {what} at t={}: {:6.2}% ± {:5.2}%",
                s.series.name(),
                s.iteration,
                100.0 * s.mean,
                100.0 * s.std_dev
            );
        }
    }
    Ok(())
}
