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

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed::derive_seed;

use super::{wilson_verdict, Verdict, WilsonConfig, WilsonDecision};

/// A seeded boolean experiment run at sample size `N`.
pub trait SuccessOracle: Sync {
    fn trial(&self, n: usize, seed: u64) -> bool;
}

impl<F: Fn(usize, u64) -> bool + Sync> SuccessOracle for F {
    fn trial(&self, n: usize, seed: u64) -> bool {
        self(n, seed)
    }
}

/// Runs trials in batches until the Wilson rule decides or `t_max` is reached.
///
/// Trial `i` at size `N` uses `derive_seed(seed, [N, i])`.
pub fn certify_at_n(oracle: &dyn SuccessOracle, n: usize, cfg: &WilsonConfig, seed: u64) -> Result<WilsonDecision> {
    cfg.validate()?;
    let (mut s, mut t) = (0usize, 0usize);
    loop {
        let end = (t + cfg.batch).min(cfg.t_max);
        s += (t..end)
            .into_par_iter()
            .filter(|&i| oracle.trial(n, derive_seed(seed, &[n as u64, i as u64])))
            .count();
        t = end;
        let decision = wilson_verdict(s, t, cfg)?;
        if decision.verdict != Verdict::Undecided || t >= cfg.t_max {
            return Ok(decision);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NminResult {
    pub n_min: usize,
    pub evidence: WilsonDecision,
    pub trajectory: Vec<(usize, Verdict)>,
    pub total_trials: usize,
}

/// Exponential growth `N <- max(N + 1, floor(g N))` until the first accept,
/// then bisection on `(N_fail, N_hit]`.
pub fn nmin_search(oracle: &dyn SuccessOracle, cfg: &WilsonConfig, seed: u64) -> Result<NminResult> {
    cfg.validate()?;
    let mut trajectory = Vec::new();
    let mut total_trials = 0;
    let mut run = |n: usize, trajectory: &mut Vec<(usize, Verdict)>| -> Result<WilsonDecision> {
        let d = certify_at_n(oracle, n, cfg, seed)?;
        trajectory.push((n, d.verdict));
        total_trials += d.t;
        Ok(d)
    };

    let mut n = cfg.n0;
    let mut n_fail = cfg.n0 - 1;
    let (mut hi, mut evidence) = loop {
        if n > cfg.n_ceiling {
            return Err(Error::NoAccept(cfg.n_ceiling));
        }
        let d = run(n, &mut trajectory)?;
        if d.accepted() {
            break (n, d);
        }
        n_fail = n;
        n = (n + 1).max((cfg.growth * n as f64).floor() as usize);
    };
    let mut lo = n_fail;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let d = run(mid, &mut trajectory)?;
        if d.accepted() {
            hi = mid;
            evidence = d;
        } else {
            lo = mid;
        }
    }
    Ok(NminResult { n_min: hi, evidence, trajectory, total_trials })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalNmin {
    pub n_min: usize,
    pub p_hat: f64,
    pub trials: usize,
}

/// First grid point whose success fraction over `t` seeded trials reaches `p_star`.
pub fn empirical_nmin(
    oracle: &dyn SuccessOracle,
    grid: &[usize],
    trials: usize,
    p_star: f64,
    seed: u64,
) -> Result<EmpiricalNmin> {
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("grid must be strictly ascending".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    for &n in grid {
        let hits = (0..trials)
            .into_par_iter()
            .filter(|&i| oracle.trial(n, derive_seed(seed, &[n as u64, i as u64])))
            .count();
        let p_hat = hits as f64 / trials as f64;
        if p_hat >= p_star {
            return Ok(EmpiricalNmin { n_min: n, p_hat, trials });
        }
    }
    Err(Error::NoGridPoint)
}

/// `start, ..., end` with each point `max(prev + 1, ceil(prev * ratio))`.
pub fn geometric_grid(start: usize, end: usize, ratio: f64) -> Vec<usize> {
    let mut grid = Vec::new();
    let mut n = start.max(1);
    while n <= end {
        grid.push(n);
        n = (n + 1).max((n as f64 * ratio).ceil() as usize);
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_37() {
        let oracle = |n: usize, _: u64| n >= 37;
        let res = nmin_search(&oracle, &WilsonConfig::default(), 1).unwrap();
        assert_eq!(res.n_min, 37);
        let exp: Vec<usize> = res.trajectory.iter().take(10).map(|(n, _)| *n).collect();
        assert_eq!(exp, vec![1, 2, 3, 4, 6, 9, 13, 19, 28, 42]);
    }

    #[test]
    fn immediate_accept() {
        let oracle = |n: usize, _: u64| n >= 5;
        let cfg = WilsonConfig { n0: 5, ..WilsonConfig::default() };
        let res = nmin_search(&oracle, &cfg, 1).unwrap();
        assert_eq!(res.n_min, 5);
        assert_eq!(res.trajectory.len(), 1);
    }

    #[test]
    fn batch_one_accepts_at_seven() {
        let oracle = |_: usize, _: u64| true;
        let cfg = WilsonConfig { batch: 1, ..WilsonConfig::default() };
        let d = certify_at_n(&oracle, 1, &cfg, 0).unwrap();
        assert_eq!((d.verdict, d.t), (Verdict::Accept, 7));
    }

    #[test]
    fn never_succeeds() {
        let oracle = |_: usize, _: u64| false;
        let cfg = WilsonConfig { n_ceiling: 100, ..WilsonConfig::default() };
        assert!(matches!(nmin_search(&oracle, &cfg, 1), Err(Error::NoAccept(100))));
        let d = certify_at_n(&oracle, 1, &cfg, 0).unwrap();
        assert_eq!((d.verdict, d.t), (Verdict::EarlyReject, 25));
        assert!(matches!(empirical_nmin(&oracle, &[1, 2], 10, 0.7, 0), Err(Error::NoGridPoint)));
    }

    fn verdicts(cfg: &WilsonConfig) -> [usize; 3] {
        use rand::Rng as _;
        let oracle = |_: usize, s: u64| crate::seed::rng(s).random_bool(0.7);
        let mut counts = [0usize; 3];
        for run in 0..100u64 {
            counts[certify_at_n(&oracle, 1, cfg, run).unwrap().verdict as usize] += 1;
        }
        counts
    }

    #[test]
    fn bernoulli_at_target() {
        // interim looks every batch cross the boundary often
        let looks = verdicts(&WilsonConfig::default());
        assert!(looks[2] >= 30 && looks[2] < 80, "{looks:?}");
        let single = verdicts(&WilsonConfig { batch: 2000, ..WilsonConfig::default() });
        assert!(single[2] >= 80, "{single:?}");
    }

    #[test]
    fn grid_shape() {
        assert_eq!(geometric_grid(1, 10, 1.01), (1..=10).collect::<Vec<_>>());
        let g = geometric_grid(1, 3000, 1.01);
        assert!(g.windows(2).all(|w| w[1] as f64 <= (w[0] as f64 * 1.01).ceil().max(w[0] as f64 + 1.0)));
    }
}
