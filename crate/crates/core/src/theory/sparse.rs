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

use nalgebra::DMatrix;
use rand::Rng as _;

use crate::dense::{DenseOperator, Limits, C64, ZERO};
use crate::error::{Error, Result};
use crate::seed;

/// Square complex matrix in compressed sparse row form.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<C64>,
}

impl SparseOperator {
    /// Sums duplicate `(row, col)` entries and drops exact zeros.
    pub fn from_triplets(dim: usize, mut entries: Vec<(usize, usize, C64)>, limits: &Limits) -> Result<Self> {
        if entries.len() > limits.sparse_nnz {
            return Err(Error::SparseCapExceeded { nnz: entries.len(), cap: limits.sparse_nnz });
        }
        if let Some(&(r, c, _)) = entries.iter().find(|(r, c, _)| *r >= dim || *c >= dim) {
            return Err(Error::DimensionMismatch(format!("entry ({r},{c}) outside dimension {dim}")));
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols = Vec::with_capacity(entries.len());
        let mut vals: Vec<C64> = Vec::with_capacity(entries.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in entries {
            if last == Some((r, c)) {
                *vals.last_mut().unwrap() += v;
            } else {
                cols.push(c);
                vals.push(v);
                row_ptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for r in 0..dim {
            row_ptr[r + 1] += row_ptr[r];
        }
        let mut op = SparseOperator { dim, row_ptr, cols, vals };
        op.prune();
        Ok(op)
    }

    fn prune(&mut self) {
        if self.vals.iter().all(|v| *v != ZERO) {
            return;
        }
        let mut row_ptr = vec![0usize; self.dim + 1];
        let mut cols = Vec::with_capacity(self.cols.len());
        let mut vals = Vec::with_capacity(self.vals.len());
        for r in 0..self.dim {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                if self.vals[k] != ZERO {
                    cols.push(self.cols[k]);
                    vals.push(self.vals[k]);
                }
            }
            row_ptr[r + 1] = cols.len();
        }
        *self = SparseOperator { dim: self.dim, row_ptr, cols, vals };
    }

    pub fn from_dense(op: &DenseOperator) -> Self {
        let dim = op.dim();
        let mut entries = Vec::new();
        for r in 0..dim {
            for c in 0..dim {
                let v = op.get(r, c);
                if v != ZERO {
                    entries.push((r, c, v));
                }
            }
        }
        let limits = Limits { sparse_nnz: usize::MAX, ..Limits::default() };
        SparseOperator::from_triplets(dim, entries, &limits).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        let range = self.row_ptr[row]..self.row_ptr[row + 1];
        match self.cols[range.clone()].binary_search(&col) {
            Ok(k) => self.vals[range.start + k],
            Err(_) => ZERO,
        }
    }

    /// `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.dim).flat_map(move |r| (self.row_ptr[r]..self.row_ptr[r + 1]).map(move |k| (r, self.cols[k], self.vals[k])))
    }

    pub fn to_dense(&self, limits: &Limits) -> Result<DenseOperator> {
        limits.check_dense(self.dim)?;
        let mut m = DMatrix::from_element(self.dim, self.dim, ZERO);
        for (r, c, v) in self.entries() {
            m[(r, c)] = v;
        }
        Ok(DenseOperator::from_matrix(m))
    }

    pub fn adjoint(&self) -> SparseOperator {
        let entries = self.entries().map(|(r, c, v)| (c, r, v.conj())).collect();
        let limits = Limits { sparse_nnz: usize::MAX, ..Limits::default() };
        SparseOperator::from_triplets(self.dim, entries, &limits).unwrap()
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &SparseOperator) -> f64 {
        let a = self.entries().map(|(r, c, v)| (v - other.get(r, c)).norm());
        let b = other.entries().map(|(r, c, v)| (v - self.get(r, c)).norm());
        a.chain(b).fold(0.0, f64::max)
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[C64], y: &mut [C64]) {
        for (r, out) in y.iter_mut().enumerate() {
            let mut acc = ZERO;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            *out = acc;
        }
    }

    /// `y = A^dagger x`.
    pub fn apply_adjoint(&self, x: &[C64], y: &mut [C64]) {
        y.iter_mut().for_each(|v| *v = ZERO);
        for (r, &xr) in x.iter().enumerate() {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                y[self.cols[k]] += self.vals[k].conj() * xr;
            }
        }
    }
}

/// Power-iteration controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub seed: u64,
    /// Dimensions up to this use a dense singular-value computation.
    pub dense_below: usize,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions { tol: 1e-9, max_iter: 10_000, restarts: 3, seed: 0x5eed, dense_below: 1024 }
    }
}

/// Spectral norm, densely for small operators and by power iteration otherwise.
pub fn operator_norm(a: &SparseOperator, opts: &NormOptions) -> Result<f64> {
    if a.dim() <= opts.dense_below {
        let limits = Limits { dense_dim: opts.dense_below.max(a.dim()), ..Limits::default() };
        return Ok(a.to_dense(&limits)?.spectral_norm());
    }
    power_iteration_norm(a, opts)
}

/// Largest singular value from power iteration on `A^dagger A` with random restarts.
pub fn power_iteration_norm(a: &SparseOperator, opts: &NormOptions) -> Result<f64> {
    let dim = a.dim();
    if dim == 0 {
        return Ok(0.0);
    }
    let mut y = vec![ZERO; dim];
    for restart in 0..=opts.restarts {
        let mut rng = seed::derived_rng(opts.seed, &[restart as u64]);
        let mut x: Vec<C64> = (0..dim)
            .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        normalize(&mut x);
        let mut prev = 0.0;
        for _ in 0..opts.max_iter {
            a.apply(&x, &mut y);
            let sigma2: f64 = y.iter().map(|v| v.norm_sqr()).sum();
            a.apply_adjoint(&y, &mut x);
            if normalize(&mut x) == 0.0 {
                return Ok(0.0);
            }
            if (sigma2 - prev).abs() <= opts.tol * sigma2 {
                return Ok(sigma2.sqrt());
            }
            prev = sigma2;
        }
    }
    Err(Error::NoConvergence { restarts: opts.restarts })
}

fn normalize(x: &mut [C64]) -> f64 {
    let norm = x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}
