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

use serde::Serialize;

use crate::bell::{histogram, outcome_distribution, StateSpec};
use crate::bell::character_transform;
use crate::dense::{Limits, C64};
use crate::error::{Error, Result};
use crate::protocols::{random_guess, single_copy_trial, spiked_moment, theoretical_hit_probability, theoretical_single_copy_nmin};
use crate::seed::{self, derive_seed};
use crate::stats::{empirical_nmin, geometric_grid, nmin_search, wilson_interval};
use crate::weyl::{DimVector, WeylString};

use super::config::ExperimentConfig;

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub strategy: String,
    #[serde(rename = "N_min")]
    pub n_min: usize,
    pub trials: usize,
    pub p_hat: f64,
    pub w_minus: f64,
    pub seed: u64,
}

/// One three-copy trial at sample size `draws`.
///
/// Draws `W` from the guess set, samples coarse Bell outcomes of
/// `rho_W^eps ⊗ 3`, and succeeds iff every moment estimate lies within
/// `delta` of `tr(V rho)^3`.
pub fn three_copy_trial(n: usize, eps: f64, delta: f64, draws: usize, seed: u64, limits: &Limits) -> Result<bool> {
    let mut rng = seed::rng(seed);
    let w = random_guess(n, &mut rng);
    let dims = DimVector::uniform(3, n)?;
    let dist = outcome_distribution(&StateSpec::Spiked { w: w.clone(), eps }, &dims, limits)?;
    let layout = dist.layout();
    let samples = dist.sample_indices(draws, derive_seed(seed, &[1]));
    let mut values: Vec<C64> = histogram(layout, &samples, limits)?.into_iter().map(|p| C64::new(p, 0.0)).collect();
    character_transform(&mut values, layout, false);
    let special: Vec<(usize, C64)> = [WeylString::identity(dims.clone()), w.clone(), w.adjoint()]
        .iter()
        .map(|v| {
            let v = v.normalized();
            Ok((layout.transform_index(&v) as usize, spiked_moment(&w, eps, &v, 3)?))
        })
        .collect::<Result<_>>()?;
    let worst = values
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let target = special.iter().find(|(j, _)| *j == i).map(|(_, t)| *t).unwrap_or_default();
            (y - target).norm()
        })
        .fold(0.0, f64::max);
    Ok(worst < delta)
}

/// One single-copy trial: hidden `W` from the guess set, `draws` uniform guesses.
pub fn single_copy_experiment_trial(n: usize, draws: usize, seed: u64) -> Result<bool> {
    let mut rng = seed::rng(seed);
    let w = random_guess(n, &mut rng);
    single_copy_trial(n, &w, draws, derive_seed(seed, &[1]))
}

#[derive(Debug, Clone)]
pub struct ScalingReport {
    pub rows: Vec<ScalingRow>,
    pub csv: PathBuf,
    pub meta: PathBuf,
}

/// Sidecar path `<stem>.meta.toml` next to the CSV.
pub fn meta_path(csv: &Path) -> PathBuf {
    csv.with_extension("meta.toml")
}

fn three_copy_row(cfg: &ExperimentConfig, n: usize, limits: &Limits) -> Result<ScalingRow> {
    let seed = derive_seed(cfg.seed, &[n as u64, 3]);
    let oracle = |draws: usize, s: u64| three_copy_trial(n, cfg.epsilon, cfg.delta, draws, s, limits).unwrap_or(false);
    let res = nmin_search(&oracle, &cfg.wilson(), seed)?;
    Ok(ScalingRow {
        n,
        strategy: "three-copy".into(),
        n_min: res.n_min,
        trials: res.total_trials,
        p_hat: res.evidence.p_hat(),
        w_minus: res.evidence.w_minus,
        seed,
    })
}

fn single_copy_rows(cfg: &ExperimentConfig, n: usize) -> Result<[ScalingRow; 2]> {
    let seed = derive_seed(cfg.seed, &[n as u64, 1]);
    let closed = theoretical_single_copy_nmin(n, cfg.p_star) as usize;
    let grid = geometric_grid(1, closed + closed / 4 + 1, 1.01);
    let oracle = |draws: usize, s: u64| single_copy_experiment_trial(n, draws, s).unwrap_or(false);
    let emp = empirical_nmin(&oracle, &grid, cfg.t_max, cfg.p_star, seed)?;
    let hits = (emp.p_hat * emp.trials as f64).round() as usize;
    let (w_minus, _) = wilson_interval(hits, emp.trials, cfg.wilson().z)?;
    let p_theory = theoretical_hit_probability(n, closed as u64);
    Ok([
        ScalingRow { n, strategy: "single-copy".into(), n_min: emp.n_min, trials: emp.trials, p_hat: emp.p_hat, w_minus, seed },
        ScalingRow { n, strategy: "single-copy-theory".into(), n_min: closed, trials: 0, p_hat: p_theory, w_minus: p_theory, seed },
    ])
}

/// Computes every row without touching the filesystem. `progress` sees each row as it lands.
pub fn scaling_rows(cfg: &ExperimentConfig, mut progress: impl FnMut(&ScalingRow)) -> Result<Vec<ScalingRow>> {
    cfg.validate()?;
    let limits = Limits::default();
    let mut rows = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        if cfg.strategy.three_copy() {
            let row = three_copy_row(cfg, n, &limits)?;
            progress(&row);
            rows.push(row);
        }
        if cfg.strategy.single_copy() {
            for row in single_copy_rows(cfg, n)? {
                progress(&row);
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

pub fn write_rows(path: &Path, rows: &[ScalingRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Runs the study, writes the CSV to `cfg.out` and the config plus planted-state notes beside it.
pub fn run_scaling(cfg: &ExperimentConfig, progress: impl FnMut(&ScalingRow)) -> Result<ScalingReport> {
    let rows = scaling_rows(cfg, progress)?;
    write_rows(&cfg.out, &rows)?;
    let meta = meta_path(&cfg.out);
    let text = format!(
        "{}\n[planted]\nstate = \"(1 + 3 eps (W + W^dagger)) / 3^n\"\nepsilon = {:?}\nguess_set = \"{{1,2}}^2 per site\"\n",
        cfg.to_toml(),
        cfg.epsilon
    );
    std::fs::write(&meta, text)?;
    Ok(ScalingReport { rows, csv: cfg.out.clone(), meta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::Strategy;

    #[test]
    fn trial_succeeds_with_many_draws() {
        let limits = Limits::default();
        let ok = (0..10).filter(|&s| three_copy_trial(2, 0.3, 0.1, 3000, s, &limits).unwrap()).count();
        assert!(ok >= 9);
        let low = (0..10).filter(|&s| three_copy_trial(2, 0.3, 0.1, 10, s, &limits).unwrap()).count();
        assert_eq!(low, 0);
    }

    #[test]
    fn small_run_is_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = ExperimentConfig {
            n_max: 2,
            seed: 11,
            t_max: 400,
            out: dir.path().join("a.csv"),
            strategy: Strategy::Both,
            ..Default::default()
        };
        let first = run_scaling(&cfg, |_| {}).unwrap();
        let second = run_scaling(&ExperimentConfig { out: dir.path().join("b.csv"), ..cfg.clone() }, |_| {}).unwrap();
        let a = std::fs::read_to_string(&first.csv).unwrap();
        let b = std::fs::read_to_string(&second.csv).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("n,strategy,N_min,trials,p_hat,w_minus,seed\n"));
        assert_eq!(first.rows.len(), 6);
        assert!(std::fs::read_to_string(first.meta).unwrap().contains("epsilon = 0.3"));
        let theory: Vec<usize> = first.rows.iter().filter(|r| r.strategy == "single-copy-theory").map(|r| r.n_min).collect();
        assert_eq!(theory, [2, 10]);
    }
}
