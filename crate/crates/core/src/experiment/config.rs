// Copyright 2026 The whamp Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats::WilsonConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    ThreeCopy,
    SingleCopy,
    Both,
}

impl Strategy {
    pub fn three_copy(self) -> bool {
        matches!(self, Strategy::ThreeCopy | Strategy::Both)
    }

    pub fn single_copy(self) -> bool {
        matches!(self, Strategy::SingleCopy | Strategy::Both)
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "three-copy" => Ok(Strategy::ThreeCopy),
            "single-copy" => Ok(Strategy::SingleCopy),
            "both" => Ok(Strategy::Both),
            other => Err(Error::Config(format!("unknown strategy `{other}`"))),
        }
    }
}

/// Parameters of a scaling run.
///
/// On disk this is TOML with an `[experiment]` and a `[stats]` table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub d: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Strength of the planted state `rho_W^eps`.
    pub epsilon: f64,
    /// Reconstruction tolerance of the three-copy success test.
    pub delta: f64,
    pub p_star: f64,
    pub alpha: f64,
    pub growth: f64,
    pub t_max: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub strategy: Strategy,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            d: 3,
            n_min: 1,
            n_max: 6,
            epsilon: 0.3,
            delta: 0.1,
            p_star: 0.7,
            alpha: 0.1,
            growth: 1.5,
            t_max: 2000,
            seed: 0,
            out: PathBuf::from("scaling.csv"),
            strategy: Strategy::Both,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileExperiment {
    d: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    epsilon: Option<f64>,
    delta: Option<f64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    strategy: Option<Strategy>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileStats {
    p_star: Option<f64>,
    alpha: Option<f64>,
    growth: Option<f64>,
    t_max: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    experiment: FileExperiment,
    #[serde(default)]
    stats: FileStats,
}

impl ExperimentConfig {
    /// Reads a config file. `seed` is mandatory.
    pub fn from_toml(text: &str) -> Result<ExperimentConfig> {
        let file: FileConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let e = file.experiment;
        let s = file.stats;
        let def = ExperimentConfig::default();
        let cfg = ExperimentConfig {
            d: e.d.unwrap_or(def.d),
            n_min: e.n_min.unwrap_or(def.n_min),
            n_max: e.n_max.unwrap_or(def.n_max),
            epsilon: e.epsilon.unwrap_or(def.epsilon),
            delta: e.delta.unwrap_or(def.delta),
            p_star: s.p_star.unwrap_or(def.p_star),
            alpha: s.alpha.unwrap_or(def.alpha),
            growth: s.growth.unwrap_or(def.growth),
            t_max: s.t_max.unwrap_or(def.t_max),
            seed: e.seed.ok_or_else(|| Error::Config("`experiment.seed` is required".into()))?,
            out: e.out.unwrap_or(def.out),
            strategy: e.strategy.unwrap_or(def.strategy),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<ExperimentConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        ExperimentConfig::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        let strategy = match self.strategy {
            Strategy::ThreeCopy => "three-copy",
            Strategy::SingleCopy => "single-copy",
            Strategy::Both => "both",
        };
        format!(
            "[experiment]\nd = {}\nn_min = {}\nn_max = {}\nepsilon = {:?}\ndelta = {:?}\nseed = {}\nout = {:?}\nstrategy = \"{strategy}\"\n\n[stats]\np_star = {:?}\nalpha = {:?}\ngrowth = {:?}\nt_max = {}\n",
            self.d,
            self.n_min,
            self.n_max,
            self.epsilon,
            self.delta,
            self.seed,
            self.out.display().to_string(),
            self.p_star,
            self.alpha,
            self.growth,
            self.t_max,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.d != 3 {
            return bad(format!("the scaling study is defined for d = 3, got {}", self.d));
        }
        if self.n_min == 0 || self.n_min > self.n_max || self.n_max > 12 {
            return bad(format!("need 1 <= n_min <= n_max <= 12, got {}..={}", self.n_min, self.n_max));
        }
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0 / 3.0) {
            return bad(format!("epsilon must lie in (0, 1/3], got {}", self.epsilon));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return bad(format!("delta must lie in (0, 1), got {}", self.delta));
        }
        self.wilson().validate()
    }

    pub fn wilson(&self) -> WilsonConfig {
        WilsonConfig { t_max: self.t_max, growth: self.growth, ..WilsonConfig::with_alpha(self.p_star, self.alpha) }
    }
}
