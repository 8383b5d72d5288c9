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

use crate::bell::{all_moments, histogram, outcome_distribution, StateSpec};
use crate::dense::{DenseOperator, Limits, C64, ZERO};
use crate::error::{Error, Result};
use crate::protocols::{AmplitudeTable, SampleMode};
use crate::weyl::WeylString;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    AmplitudeOnly,
    PhaseRecovered,
}

/// Estimates of `tr(W rho)` for every phase-one string, in lexicographic order.
#[derive(Debug, Clone)]
pub struct ExpectationTable {
    dims: crate::weyl::DimVector,
    values: Vec<C64>,
    provenance: Vec<Provenance>,
}

impl ExpectationTable {
    pub fn dims(&self) -> &crate::weyl::DimVector {
        &self.dims
    }

    pub fn get(&self, w: &WeylString) -> (C64, Provenance) {
        let i = w.normalized().lex_index() as usize;
        (self.values[i] * w.scalar(), self.provenance[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (WeylString, C64, Provenance)> + '_ {
        self.values
            .iter()
            .zip(&self.provenance)
            .enumerate()
            .map(|(i, (v, p))| (WeylString::from_lex_index(&self.dims, i as u128), *v, *p))
    }

    pub fn recovered_count(&self) -> usize {
        self.provenance.iter().filter(|p| **p == Provenance::PhaseRecovered).count()
    }

    /// Largest `|estimate - tr(W rho)|` over phase-recovered strings.
    pub fn max_error(&self, rho: &DenseOperator) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for (w, v, p) in self.iter() {
            if p == Provenance::PhaseRecovered {
                worst = worst.max((v - w.expectation(rho)?).norm());
            }
        }
        Ok(worst)
    }
}

/// `3^{d-1} eps` for `d` copies.
pub fn phase_error_bound(copies: usize, eps: f64) -> f64 {
    3f64.powi(copies as i32 - 1) * eps
}

/// Measures `sigma^{⊗(c-1)} ⊗ rho` with the coarse Bell PVM and divides out `tr(W sigma)^{c-1}`.
///
/// Strings with `|tr(W sigma)| < eps / 3` keep the magnitude from `u` and are marked amplitude-only.
pub fn recover_phases(
    sigma: &DenseOperator,
    rho: &DenseOperator,
    u: &AmplitudeTable,
    eps: f64,
    mode: SampleMode,
    seed: u64,
    limits: &Limits,
) -> Result<ExpectationTable> {
    let dims = u.dims().clone();
    if sigma.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!("sigma {} vs rho {}", sigma.dim(), rho.dim())));
    }
    let dist = {
        let layout = crate::bell::ClusterLayout::new(&dims)?;
        let mut copies = vec![sigma.clone(); layout.copies() - 1];
        copies.push(rho.clone());
        outcome_distribution(&StateSpec::Copies(copies), &dims, limits)?
    };
    let layout = dist.layout().clone();
    let weights = match mode {
        SampleMode::Exact => dist.to_table(limits)?,
        SampleMode::Samples(0) => return Err(Error::InvalidArgument("N must be at least 1".into())),
        SampleMode::Samples(n) => histogram(&layout, &dist.sample_indices(n, seed), limits)?,
    };
    let moments = all_moments(&layout, &weights, limits)?;
    let c = layout.copies() as i32;
    let mut values = vec![ZERO; moments.len()];
    let mut provenance = vec![Provenance::AmplitudeOnly; moments.len()];
    for (i, z) in moments.into_iter().enumerate() {
        let w = WeylString::from_lex_index(&dims, i as u128);
        let s = w.expectation(sigma)?;
        if s.norm() >= eps / 3.0 {
            values[i] = z / s.powi(c - 1);
            provenance[i] = Provenance::PhaseRecovered;
        } else {
            values[i] = C64::new(u.values()[i], 0.0);
        }
    }
    Ok(ExpectationTable { dims, values, provenance })
}
