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

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Parameters of the Wilson stopping rule and the `N_min` search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilsonConfig {
    pub p_star: f64,
    pub alpha: f64,
    pub z: f64,
    pub t_max: usize,
    pub growth: f64,
    pub n0: usize,
    /// Trials between interval recomputations.
    pub batch: usize,
    /// Largest `N` the exponential phase may reach.
    pub n_ceiling: usize,
}

impl Default for WilsonConfig {
    fn default() -> Self {
        WilsonConfig::with_alpha(0.7, 0.1)
    }
}

impl WilsonConfig {
    /// Two-sided `1 - alpha` interval around target `p_star`.
    pub fn with_alpha(p_star: f64, alpha: f64) -> Self {
        WilsonConfig {
            p_star,
            alpha,
            z: normal_quantile(1.0 - alpha / 2.0),
            t_max: 2000,
            growth: 1.5,
            n0: 1,
            batch: 25,
            n_ceiling: 1 << 24,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        if !(self.p_star > 0.0 && self.p_star < 1.0) {
            return bad("p_star must lie in (0, 1)");
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad("alpha must lie in (0, 1)");
        }
        if !(self.z > 0.0 && self.z.is_finite()) {
            return bad("z must be positive");
        }
        if self.growth <= 1.0 {
            return bad("growth must exceed 1");
        }
        if self.t_max == 0 || self.batch == 0 || self.n0 == 0 {
            return bad("t_max, batch and n0 must be positive");
        }
        Ok(())
    }
}

/// Standard normal quantile.
pub fn normal_quantile(p: f64) -> f64 {
    Normal::standard().inverse_cdf(p)
}

/// Wilson score interval for `s` successes in `t` trials, clipped to `[0, 1]`.
pub fn wilson_interval(s: usize, t: usize, z: f64) -> Result<(f64, f64)> {
    if t == 0 {
        return Err(Error::InvalidArgument("Wilson interval needs t >= 1".into()));
    }
    if s > t {
        return Err(Error::InvalidArgument(format!("s = {s} exceeds t = {t}")));
    }
    let (tf, z2) = (t as f64, z * z);
    let p = s as f64 / tf;
    let denom = tf + z2;
    let center = (tf * p + z2 / 2.0) / denom;
    let half = z * tf.sqrt() / denom * (p * (1.0 - p) + z2 / (4.0 * tf)).sqrt();
    // the clip also absorbs rounding at s = 0 and s = t
    let lo = (center - half).clamp(0.0, p);
    let hi = (center + half).clamp(p, 1.0);
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Accept,
    EarlyReject,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilsonDecision {
    pub verdict: Verdict,
    pub s: usize,
    pub t: usize,
    pub w_minus: f64,
    pub w_plus: f64,
}

impl WilsonDecision {
    pub fn p_hat(&self) -> f64 {
        self.s as f64 / self.t as f64
    }

    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }
}

/// Accept when `w_- >= p*`, early-reject when `w_+ < p*`, otherwise keep going.
pub fn wilson_verdict(s: usize, t: usize, cfg: &WilsonConfig) -> Result<WilsonDecision> {
    let (w_minus, w_plus) = wilson_interval(s, t, cfg.z)?;
    let verdict = if w_minus >= cfg.p_star {
        Verdict::Accept
    } else if w_plus < cfg.p_star {
        Verdict::EarlyReject
    } else {
        Verdict::Undecided
    };
    Ok(WilsonDecision { verdict, s, t, w_minus, w_plus })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventy_of_hundred() {
        let (lo, hi) = wilson_interval(70, 100, 1.6449).unwrap();
        assert!((lo - 0.6202).abs() < 5e-4, "{lo}");
        assert!((hi - 0.7693).abs() < 5e-4, "{hi}");
    }

    #[test]
    fn all_successes() {
        let (lo, hi) = wilson_interval(50, 50, 1.6449).unwrap();
        assert_eq!(hi, 1.0);
        assert!(lo > 0.9);
    }

    #[test]
    fn collapses_at_zero_z() {
        let (lo, hi) = wilson_interval(30, 80, 1e-9).unwrap();
        assert!((lo - 0.375).abs() < 1e-8 && (hi - 0.375).abs() < 1e-8);
        assert!(wilson_interval(0, 0, 1.0).is_err());
    }

    #[test]
    fn default_quantile() {
        assert!((WilsonConfig::default().z - 1.6449).abs() < 1e-4);
    }
}
