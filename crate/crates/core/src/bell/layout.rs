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

use crate::dense::C64;
use crate::error::{Error, Result};
use crate::weyl::arith::is_prime;
use crate::weyl::{DimVector, Phase, WeylString};

/// A group of `p` copies of one site measured jointly in the coarse Bell basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cluster {
    pub site: usize,
    pub p: usize,
    pub first_copy: usize,
}

impl Cluster {
    pub fn copies(&self) -> std::ops::Range<usize> {
        self.first_copy..self.first_copy + self.p
    }
}

/// One `(s, q)` pair per cluster.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoarseOutcome {
    pub pairs: Vec<(usize, usize)>,
}

/// How the `c = lcm(dims)` copies of every site are grouped into clusters.
///
/// Site `i` of local dimension `p_i` contributes `c / p_i` clusters. Outcomes are
/// packed in mixed radix `p^2` per cluster, cluster 0 most significant, with the
/// slot of `(s, q)` at `s * p + q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterLayout {
    dims: DimVector,
    copies: usize,
    clusters: Vec<Cluster>,
    strides: Vec<u64>,
    total: u128,
}

impl ClusterLayout {
    pub fn new(dims: &DimVector) -> Result<Self> {
        if !dims.all_prime() {
            return Err(Error::InvalidDims(format!("coarse Bell sampling needs prime site dimensions, got {dims}")));
        }
        let copies = dims.lcm();
        let mut clusters = Vec::new();
        for (site, p) in dims.iter().enumerate() {
            for g in 0..copies / p {
                clusters.push(Cluster { site, p, first_copy: g * p });
            }
        }
        let total = clusters
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul((c.p * c.p) as u128))
            .unwrap_or(u128::MAX);
        if total > u64::MAX as u128 {
            return Err(Error::EnumerationCapExceeded { count: total, cap: u64::MAX as u128 });
        }
        let mut strides = vec![1u64; clusters.len()];
        for k in (0..clusters.len().saturating_sub(1)).rev() {
            let p = clusters[k + 1].p as u64;
            strides[k] = strides[k + 1] * p * p;
        }
        Ok(ClusterLayout { dims: dims.clone(), copies, clusters, strides, total })
    }

    /// Uniform prime dimension: one cluster of `d` copies per site.
    pub fn prime(d: usize, n: usize) -> Result<Self> {
        if !is_prime(d) {
            return Err(Error::InvalidDims(format!("{d} is not prime")));
        }
        ClusterLayout::new(&DimVector::uniform(d, n)?)
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    /// Number of copies of the state consumed per measurement.
    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn num_outcomes(&self) -> u128 {
        self.total
    }

    pub(crate) fn stride(&self, cluster: usize) -> u64 {
        self.strides[cluster]
    }

    /// Slot `s * p + q` of cluster `k` in a packed outcome.
    pub fn slot(&self, index: u64, cluster: usize) -> usize {
        let p = self.clusters[cluster].p as u64;
        ((index / self.strides[cluster]) % (p * p)) as usize
    }

    pub fn encode(&self, outcome: &CoarseOutcome) -> Result<u64> {
        if outcome.pairs.len() != self.clusters.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} pairs for {} clusters",
                outcome.pairs.len(),
                self.clusters.len()
            )));
        }
        let mut idx = 0u64;
        for (k, (&(s, q), c)) in outcome.pairs.iter().zip(&self.clusters).enumerate() {
            if s >= c.p || q >= c.p {
                return Err(Error::InvalidLabel(format!("outcome ({s},{q}) out of range for p={}", c.p)));
            }
            idx += (s * c.p + q) as u64 * self.strides[k];
        }
        Ok(idx)
    }

    pub fn decode(&self, index: u64) -> CoarseOutcome {
        let pairs = (0..self.clusters.len())
            .map(|k| {
                let slot = self.slot(index, k);
                let p = self.clusters[k].p;
                (slot / p, slot % p)
            })
            .collect();
        CoarseOutcome { pairs }
    }

    fn check_string(&self, w: &WeylString) -> Result<()> {
        if w.dims() != &self.dims {
            return Err(Error::DimensionMismatch(format!("string over {} for layout over {}", w.dims(), self.dims)));
        }
        Ok(())
    }

    /// Exact per-outcome estimator value `phase^c prod_k omega_p^{z s - x q}`.
    pub fn character(&self, w: &WeylString, index: u64) -> Result<Phase> {
        self.check_string(w)?;
        Ok(self.character_unchecked(w, index))
    }

    pub(crate) fn character_unchecked(&self, w: &WeylString, index: u64) -> Phase {
        let l = self.dims.phase_modulus();
        let mut num = (w.phase().numerator() * self.copies) as i64;
        for (k, c) in self.clusters.iter().enumerate() {
            let slot = self.slot(index, k);
            let e = w.site_character_exponent(c.site, slot / c.p, slot % c.p);
            num += (e * (l / c.p)) as i64;
        }
        Phase::new(num, l)
    }

    /// Cluster-assignment index that a full transform of the outcome table
    /// stores the moment of `w` at (`z * p + x` per cluster).
    pub(crate) fn transform_index(&self, w: &WeylString) -> u64 {
        self.clusters
            .iter()
            .enumerate()
            .map(|(k, c)| (w.z()[c.site] * c.p + w.x()[c.site]) as u64 * self.strides[k])
            .sum()
    }

    pub(crate) fn check(&self, w: &WeylString) -> Result<()> {
        self.check_string(w)
    }

    /// Complex value of [`ClusterLayout::character`].
    pub fn character_value(&self, w: &WeylString, index: u64) -> Result<C64> {
        Ok(self.character(w, index)?.to_complex())
    }
}
