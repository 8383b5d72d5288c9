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

use std::collections::HashSet;

use crate::bell::{all_moments, histogram, outcome_distribution, ClusterLayout, StateSpec};
use crate::dense::Limits;
use crate::error::{Error, Result};
use crate::weyl::arith::is_prime;
use crate::weyl::{enumerate_strings, DimVector, WeylString};

/// How many measurement rounds feed an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Use the exact outcome distribution (the `N -> infinity` limit).
    Exact,
    /// Draw this many coarse outcomes, each consuming `c` copies.
    Samples(usize),
}

/// Estimates `u_W` of `|tr(W rho)|` for every phase-one string, in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeTable {
    dims: DimVector,
    copies: usize,
    values: Vec<f64>,
    mode: SampleMode,
    seed: u64,
}

impl AmplitudeTable {
    /// Wraps externally computed amplitudes.
    pub fn from_values(dims: DimVector, values: Vec<f64>) -> Result<Self> {
        let expected = crate::weyl::string_count(&dims, false);
        if values.len() as u128 != expected {
            return Err(Error::DimensionMismatch(format!("{} values for {expected} strings", values.len())));
        }
        if values.iter().any(|v| !(0.0..=1.0 + 1e-9).contains(v)) {
            return Err(Error::InvalidArgument("amplitudes must lie in [0, 1]".into()));
        }
        let copies = dims.lcm();
        Ok(AmplitudeTable { dims, copies, values, mode: SampleMode::Exact, seed: 0 })
    }

    /// Exact `|tr(W rho)|` from a dense state.
    pub fn exact_from_state(rho: &crate::dense::DenseOperator, dims: &DimVector, limits: &Limits) -> Result<Self> {
        let values = enumerate_strings(dims, false, limits)?
            .map(|w| Ok(w.expectation(rho)?.norm().min(1.0)))
            .collect::<Result<Vec<_>>>()?;
        AmplitudeTable::from_values(dims.clone(), values)
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn mode(&self) -> SampleMode {
        self.mode
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, w: &WeylString) -> f64 {
        self.values[w.lex_index() as usize]
    }

    pub fn set(&mut self, w: &WeylString, value: f64) {
        self.values[w.lex_index() as usize] = value;
    }

    /// `(string, u_W)` pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (WeylString, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (WeylString::from_lex_index(&self.dims, i as u128), v))
    }

    /// Largest entry over non-identity strings; the first one wins ties.
    pub fn argmax(&self) -> Option<(WeylString, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for (i, &v) in self.values.iter().enumerate().skip(1) {
            if best.is_none_or(|(_, b)| v > b) {
                best = Some((i, v));
            }
        }
        best.map(|(i, v)| (WeylString::from_lex_index(&self.dims, i as u128), v))
    }
}

/// Estimates `|tr(W rho)|` for all strings from one shared pool of `c`-copy Bell outcomes.
pub fn amplitude_estimation(
    spec: &StateSpec,
    dims: &DimVector,
    mode: SampleMode,
    seed: u64,
    limits: &Limits,
) -> Result<AmplitudeTable> {
    let dist = outcome_distribution(spec, dims, limits)?;
    let layout = dist.layout().clone();
    let weights = match mode {
        SampleMode::Exact => dist.to_table(limits)?,
        SampleMode::Samples(0) => return Err(Error::InvalidArgument("N must be at least 1".into())),
        SampleMode::Samples(n) => histogram(&layout, &dist.sample_indices(n, seed), limits)?,
    };
    amplitudes_from_weights(&layout, &weights, mode, seed, limits)
}

fn amplitudes_from_weights(
    layout: &ClusterLayout,
    weights: &[f64],
    mode: SampleMode,
    seed: u64,
    limits: &Limits,
) -> Result<AmplitudeTable> {
    let c = layout.copies() as f64;
    let values = all_moments(layout, weights, limits)?
        .into_iter()
        .map(|m| m.norm().powf(1.0 / c).min(1.0))
        .collect();
    Ok(AmplitudeTable { dims: layout.dims().clone(), copies: layout.copies(), values, mode, seed })
}

/// Amplitude estimation over a square-free site pattern `(p_1, ..., p_k)` repeated `n` times.
pub fn mixed_amplitude_estimation(
    spec: &StateSpec,
    pattern: &[usize],
    n: usize,
    mode: SampleMode,
    seed: u64,
    limits: &Limits,
) -> Result<AmplitudeTable> {
    let distinct: HashSet<_> = pattern.iter().collect();
    if pattern.is_empty() || distinct.len() != pattern.len() || !pattern.iter().all(|&p| is_prime(p)) {
        return Err(Error::NotSquareFree(pattern.to_vec()));
    }
    let dims = DimVector::repeated(pattern, n)?;
    amplitude_estimation(spec, &dims, mode, seed, limits)
}

/// Copies `c` and outcome pool of size `N` to `d`-tuples: `N = ceil(4 / eps^{2d} ln(4 d^{2n} / delta))`.
pub fn hoeffding_sample_bound(d: usize, n: usize, eps: f64, delta: f64) -> Result<u64> {
    if !(eps > 0.0 && eps <= 1.0) || !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!("need 0 < eps <= 1 and 0 < delta < 1, got {eps}, {delta}")));
    }
    let ln_strings = 2.0 * n as f64 * (d as f64).ln();
    let n_f = 4.0 / eps.powi(2 * d as i32) * ((4.0f64).ln() + ln_strings - delta.ln());
    Ok(n_f.ceil() as u64)
}
