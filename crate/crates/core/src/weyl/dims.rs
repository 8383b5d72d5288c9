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

use super::arith::{is_prime, lcm};
use crate::error::{Error, Result};

/// Per-site local dimensions of a multi-qudit register.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector {
    dims: Vec<usize>,
}

impl DimVector {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidDims(format!("local dimension {bad} < 2")));
        }
        let mut l = 1u64;
        for &d in &dims {
            l = lcm(l, d as u64)
                .filter(|&v| v <= u32::MAX as u64)
                .ok_or_else(|| Error::InvalidDims("lcm of dimensions overflows".into()))?;
        }
        Ok(DimVector { dims })
    }

    /// `n` sites of local dimension `d`.
    pub fn uniform(d: usize, n: usize) -> Result<Self> {
        DimVector::new(vec![d; n])
    }

    /// The site pattern `pattern` repeated `n` times.
    pub fn repeated(pattern: &[usize], n: usize) -> Result<Self> {
        let dims = (0..n).flat_map(|_| pattern.iter().copied()).collect();
        DimVector::new(dims)
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn get(&self, site: usize) -> usize {
        self.dims[site]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.dims.iter().copied()
    }

    /// Hilbert-space dimension, `None` on overflow.
    pub fn total_dim(&self) -> Option<usize> {
        self.dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d))
    }

    pub fn lcm(&self) -> usize {
        self.dims.iter().fold(1u64, |acc, &d| lcm(acc, d as u64).unwrap()) as usize
    }

    /// Modulus `L` of exact phases: `lcm(dims)`, times four when a qubit site is present.
    pub fn phase_modulus(&self) -> usize {
        let l = self.lcm();
        if self.dims.contains(&2) {
            4 * l
        } else {
            l
        }
    }

    pub fn all_prime(&self) -> bool {
        self.dims.iter().all(|&d| is_prime(d))
    }

    /// Uniform local dimension, if every site agrees.
    pub fn uniform_dim(&self) -> Option<usize> {
        let first = *self.dims.first()?;
        self.dims.iter().all(|&d| d == first).then_some(first)
    }
}

impl std::fmt::Display for DimVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.dims)
    }
}
