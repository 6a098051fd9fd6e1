use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::metrics::DEFAULT_BIAS_EPSILON;
use crate::clicks::{CascadeModel, ClickModel, ClickModelName, ClickModelTables};
use crate::dataset::{
    read_letor_file, synthesize_dataset, Dataset, SyntheticSpec, DEFAULT_MAX_GRADE,
};
use crate::multileaving::{Method, MultileaveConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum DatasetSource {
    File(PathBuf),
    Synthetic(SyntheticSpec),
}

impl DatasetSource {
    pub fn load(&self, max_grade: u8) -> Result<Dataset> {
        match self {
            DatasetSource::File(path) => read_letor_file(path, max_grade),
            DatasetSource::Synthetic(spec) => synthesize_dataset(spec),
        }
    }
}

/// Parses `queries,docs,features` into a synthetic spec.
pub fn parse_synthetic(text: &str, seed: u64) -> Result<SyntheticSpec> {
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| {
            Error::InvalidConfig(format!(
                "synthetic spec {text:?} must be three integers q,d,f"
            ))
        })?;
    match parts[..] {
        [q, d, f] => Ok(SyntheticSpec::new(q, d, f, seed)),
        _ => Err(Error::InvalidConfig(format!(
            "synthetic spec {text:?} must be three integers q,d,f"
        ))),
    }
}

/// Parses a comma separated method list.
pub fn parse_methods(text: &str) -> Result<Vec<Method>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub dataset: DatasetSource,
    pub methods: Vec<Method>,
    /// Number of feature rankers compared per run.
    pub rankers: usize,
    pub iterations: u64,
    pub runs: u32,
    pub click_model: ClickModelName,
    pub click_tables: ClickModelTables,
    pub multileave: MultileaveConfig,
    pub train_fraction: f64,
    /// Use every query for both training and ground truth.
    pub train_equals_test: bool,
    /// Score against "no preference" with [`bias_epsilon`](Self::bias_epsilon) instead of NDCG ground truth.
    pub bias: bool,
    pub bias_epsilon: f64,
    pub max_grade: u8,
    pub seed: u64,
    pub output: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            dataset: DatasetSource::Synthetic(SyntheticSpec::new(200, 50, 64, 0)),
            methods: Method::ALL.to_vec(),
            rankers: 20,
            iterations: 2000,
            runs: 5,
            click_model: ClickModelName::Navigational,
            click_tables: ClickModelTables::default(),
            multileave: MultileaveConfig::default(),
            train_fraction: 0.5,
            train_equals_test: false,
            bias: false,
            bias_epsilon: DEFAULT_BIAS_EPSILON,
            max_grade: DEFAULT_MAX_GRADE,
            seed: 0,
            output: PathBuf::from("results.csv"),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: &str| Err(Error::InvalidConfig(msg.into()));
        if self.rankers < 2 {
            return invalid("at least two rankers are needed");
        }
        if self.iterations == 0 {
            return invalid("iterations must be at least 1");
        }
        if self.runs == 0 {
            return invalid("runs must be at least 1");
        }
        if self.methods.is_empty() {
            return invalid("no methods selected");
        }
        let mut methods = self.methods.clone();
        methods.sort();
        methods.dedup();
        if methods.len() != self.methods.len() {
            return invalid("methods listed more than once");
        }
        if self.bias_epsilon.is_nan() || self.bias_epsilon <= 0.0 {
            return invalid("bias epsilon must be positive");
        }
        if !self.train_equals_test && !(self.train_fraction > 0.0 && self.train_fraction < 1.0) {
            return invalid("train fraction must lie strictly between 0 and 1");
        }
        self.multileave.validate()?;
        self.click_tables.validate()
    }

    pub fn click_model(&self) -> ClickModel {
        self.click_tables.resolve(self.click_model)
    }

    /// Applies a TOML configuration file on top of the current values.
    pub fn apply_file(&mut self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        self.apply_str(&text)
    }

    /// Applies TOML configuration text on top of the current values.
    ///
    /// ```toml
    /// synthetic = "200,50,64"
    /// methods = ["tdm", "sosm"]
    /// rankers = 20
    /// click_model = "navigational"
    ///
    /// [click_models.navigational]
    /// p_click = [0.05, 0.3, 0.5, 0.7, 0.95]
    /// p_stop = [0.0, 0.2, 0.3, 0.4, 0.9]
    /// ```
    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        let file: ConfigFile =
            toml::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        file.apply(self)
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClickModelsSection {
    perfect: Option<CascadeModel>,
    navigational: Option<CascadeModel>,
    informational: Option<CascadeModel>,
    random: Option<RandomSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RandomSection {
    click_probability: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    dataset: Option<PathBuf>,
    synthetic: Option<String>,
    synthetic_noise: Option<f64>,
    methods: Option<OneOrMany>,
    rankers: Option<usize>,
    iterations: Option<u64>,
    runs: Option<u32>,
    click_model: Option<String>,
    pm_mode: Option<String>,
    pm_samples: Option<usize>,
    length: Option<usize>,
    exponent: Option<i32>,
    bias: Option<bool>,
    bias_epsilon: Option<f64>,
    train_fraction: Option<f64>,
    train_equals_test: Option<bool>,
    max_grade: Option<u8>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    click_models: Option<ClickModelsSection>,
}

impl ConfigFile {
    fn apply(self, c: &mut ExperimentConfig) -> Result<()> {
        if self.dataset.is_some() && self.synthetic.is_some() {
            return Err(Error::InvalidConfig(
                "set either dataset or synthetic, not both".into(),
            ));
        }
        if let Some(seed) = self.seed {
            c.seed = seed;
            if let DatasetSource::Synthetic(spec) = &mut c.dataset {
                spec.seed = seed;
            }
        }
        if let Some(path) = self.dataset {
            c.dataset = DatasetSource::File(path);
        }
        if let Some(s) = self.synthetic {
            c.dataset = DatasetSource::Synthetic(parse_synthetic(&s, c.seed)?);
        }
        if let Some(noise) = self.synthetic_noise {
            match &mut c.dataset {
                DatasetSource::Synthetic(spec) => spec.noise = noise,
                DatasetSource::File(_) => {
                    return Err(Error::InvalidConfig(
                        "synthetic_noise only applies to synthetic datasets".into(),
                    ))
                }
            }
        }
        if let Some(methods) = self.methods {
            c.methods = match methods {
                OneOrMany::One(s) => parse_methods(&s)?,
                OneOrMany::Many(v) => v.iter().map(|s| s.parse()).collect::<Result<_>>()?,
            };
        }
        if let Some(v) = self.rankers {
            c.rankers = v;
        }
        if let Some(v) = self.iterations {
            c.iterations = v;
        }
        if let Some(v) = self.runs {
            c.runs = v;
        }
        if let Some(v) = self.click_model {
            c.click_model = v.parse()?;
        }
        if let Some(v) = self.pm_mode {
            c.multileave.pm_mode = v.parse()?;
        }
        if let Some(v) = self.pm_samples {
            c.multileave.pm_samples = v;
        }
        if let Some(v) = self.length {
            c.multileave.length = v;
        }
        if let Some(v) = self.exponent {
            c.multileave.exponent = v;
        }
        if let Some(v) = self.bias {
            c.bias = v;
        }
        if let Some(v) = self.bias_epsilon {
            c.bias_epsilon = v;
        }
        if let Some(v) = self.train_fraction {
            c.train_fraction = v;
        }
        if let Some(v) = self.train_equals_test {
            c.train_equals_test = v;
        }
        if let Some(v) = self.max_grade {
            c.max_grade = v;
        }
        if let Some(v) = self.out {
            c.output = v;
        }
        if let Some(models) = self.click_models {
            let tables = &mut c.click_tables;
            for (slot, table) in [
                (&mut tables.perfect, models.perfect),
                (&mut tables.navigational, models.navigational),
                (&mut tables.informational, models.informational),
            ] {
                if let Some(table) = table {
                    table.validate()?;
                    *slot = table;
                }
            }
            if let Some(random) = models.random {
                tables.random_click_probability = random.click_probability;
            }
        }
        Ok(())
    }
}
