use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    SparseScaling,
    WidthBracket,
    ExpansionSurvey,
    CouplingUniformity,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::SparseScaling => "sparse_scaling",
            ExperimentKind::WidthBracket => "width_bracket",
            ExperimentKind::ExpansionSurvey => "expansion_survey",
            ExperimentKind::CouplingUniformity => "coupling_uniformity",
        }
    }
}

fn default_min_expected() -> f64 {
    5.0
}

fn default_width_cap() -> usize {
    12
}

fn default_cubic_m() -> Vec<usize> {
    vec![4, 6, 8, 10, 12]
}

/// Parameters of one experiment run, read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    #[serde(default)]
    pub n: Vec<usize>,
    #[serde(default)]
    pub epsilon: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// Tree-growth parameter, where used.
    #[serde(default)]
    pub delta: Option<f64>,
    /// Child cap override for tree growth.
    #[serde(default)]
    pub k_cap: Option<usize>,
    /// Chi-square bins with a smaller expected count are pooled.
    #[serde(default = "default_min_expected")]
    pub min_expected: f64,
    /// Exact widths of the giant component are computed up to this order.
    #[serde(default = "default_width_cap")]
    pub width_cap: usize,
    /// Cubic orders for the width bracket and the expansion survey.
    #[serde(default = "default_cubic_m")]
    pub cubic_m: Vec<usize>,
    /// Degree sequence for the coupling test.
    #[serde(default)]
    pub degrees: Option<Vec<usize>>,
    /// Fill the `runtime_ms` column. Off by default so output is
    /// reproducible byte for byte.
    #[serde(default)]
    pub timing: bool,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentKind, trials: usize, seed: u64) -> Self {
        ExperimentConfig {
            experiment,
            n: Vec::new(),
            epsilon: Vec::new(),
            trials,
            seed,
            output: None,
            delta: None,
            k_cap: None,
            min_expected: default_min_expected(),
            width_cap: default_width_cap(),
            cubic_m: default_cubic_m(),
            degrees: None,
            timing: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: ExperimentConfig = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::argument("trials must be at least 1"));
        }
        if let Some(e) = self.epsilon.iter().find(|e| !(**e > 0.0 && e.is_finite())) {
            return Err(Error::argument(format!("epsilon = {e} must be positive")));
        }
        if matches!(self.experiment, ExperimentKind::SparseScaling | ExperimentKind::WidthBracket)
            && (self.n.is_empty() || self.epsilon.is_empty())
        {
            return Err(Error::argument("need at least one n and one epsilon"));
        }
        for &n in &self.n {
            for &e in &self.epsilon {
                if (1.0 + e) / n as f64 > 1.0 {
                    return Err(Error::argument(format!("(1 + {e}) / {n} is not a probability")));
                }
            }
        }
        if self.min_expected.is_nan() || self.min_expected <= 0.0 {
            return Err(Error::argument("min_expected must be positive"));
        }
        Ok(())
    }

    /// Parameter cells `(n, epsilon)` in grid order.
    pub fn cells(&self) -> Vec<(usize, f64)> {
        self.n.iter().flat_map(|&n| self.epsilon.iter().map(move |&e| (n, e))).collect()
    }

    /// `epsilon^3 n`, the scale of the excess and the widths in a cell.
    pub fn scale(n: usize, epsilon: f64) -> f64 {
        epsilon.powi(3) * n as f64
    }
}
