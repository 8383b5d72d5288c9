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

//! Exact dense complex matrices and vectors used by every small-dimension
//! verification path.

use std::ops::Mul;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng as _;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Resource guardrails shared by the dense, enumeration and sparse paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limits {
    /// Largest Hilbert-space dimension for which a dense matrix is built.
    pub dense_dim: usize,
    /// Largest number of Weyl strings an enumeration may yield.
    pub enumeration: u128,
    /// Largest number of stored nonzeros in a sparse operator.
    pub sparse_nnz: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dense_dim: 1 << 12,
            enumeration: 10_000_000,
            sparse_nnz: 100_000_000,
        }
    }
}

impl Limits {
    pub fn check_dense(&self, dim: usize) -> Result<()> {
        if dim > self.dense_dim {
            Err(Error::DenseCapExceeded { dim, cap: self.dense_dim })
        } else {
            Ok(())
        }
    }
}

/// A square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    mat: DMatrix<C64>,
}

impl DenseOperator {
    pub fn from_matrix(mat: DMatrix<C64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "operator must be square");
        DenseOperator { mat }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        DenseOperator { mat: DMatrix::from_fn(dim, dim, f) }
    }

    pub fn identity(dim: usize) -> Self {
        DenseOperator { mat: DMatrix::identity(dim, dim) }
    }

    pub fn zeros(dim: usize) -> Self {
        DenseOperator { mat: DMatrix::zeros(dim, dim) }
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let n = entries.len();
        DenseOperator::from_fn(n, |i, j| if i == j { entries[i] } else { ZERO })
    }

    /// The maximally mixed state on `dim` levels.
    pub fn maximally_mixed(dim: usize) -> Self {
        let mut op = DenseOperator::identity(dim);
        op.mat /= C64::new(dim as f64, 0.0);
        op
    }

    /// `G G^dagger / tr(G G^dagger)` for a `dim x rank` complex Gaussian `G`.
    pub fn random_density(dim: usize, rank: usize, seed: u64) -> Self {
        let mut rng = crate::seed::rng(seed);
        let mut draw = || C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        let g = DMatrix::from_fn(dim, rank.max(1), |_, _| draw());
        let mut m = &g * g.adjoint();
        let tr = m.trace();
        m /= tr;
        DenseOperator { mat: m }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.mat
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.mat[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        DenseOperator { mat: self.mat.adjoint() }
    }

    pub fn trace(&self) -> C64 {
        self.mat.trace()
    }

    pub fn scale(&self, c: C64) -> Self {
        DenseOperator { mat: &self.mat * c }
    }

    pub fn add(&self, other: &Self) -> Self {
        DenseOperator { mat: &self.mat + &other.mat }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DenseOperator { mat: &self.mat - &other.mat }
    }

    pub fn kron(&self, other: &Self) -> Self {
        DenseOperator { mat: self.mat.kronecker(&other.mat) }
    }

    /// Kronecker product of a list of operators, left factor most significant.
    pub fn kron_all<'a>(ops: impl IntoIterator<Item = &'a DenseOperator>) -> Self {
        let mut acc = DenseOperator::identity(1);
        for op in ops {
            acc = acc.kron(op);
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = DenseOperator::identity(self.dim());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `tr(A · self)`, the expectation of `A` when `self` is a state.
    pub fn expectation(&self, observable: &DenseOperator) -> C64 {
        let n = self.dim();
        let mut acc = ZERO;
        for i in 0..n {
            for k in 0..n {
                acc += observable.mat[(i, k)] * self.mat[(k, i)];
            }
        }
        acc
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        StateVector { amps: &self.mat * &v.amps }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.mat
            .iter()
            .zip(other.mat.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = DenseOperator { mat: &self.mat * self.mat.adjoint() };
        prod.max_abs_diff(&DenseOperator::identity(self.dim())) <= tol
    }

    pub fn has_unit_trace(&self, tol: f64) -> bool {
        (self.trace() - ONE).norm() <= tol
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.mat + self.mat.adjoint()) * C64::new(0.5, 0.0);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.hermitian_eigenvalues().first().copied().unwrap_or(0.0)
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && self.min_eigenvalue() >= -tol
    }

    /// Checks Hermitian, unit trace and PSD at tolerance `tol`.
    pub fn is_density_matrix(&self, tol: f64) -> bool {
        self.has_unit_trace(tol) && self.is_psd(tol)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.off_diagonal_mass() <= tol
    }

    /// Sum of moduli of all off-diagonal entries.
    pub fn off_diagonal_mass(&self) -> f64 {
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += self.mat[(i, j)].norm();
                }
            }
        }
        acc
    }

    /// Largest singular value via a full SVD.
    pub fn spectral_norm(&self) -> f64 {
        self.mat
            .clone()
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }
}

impl Mul for &DenseOperator {
    type Output = DenseOperator;

    fn mul(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator { mat: &self.mat * &rhs.mat }
    }
}

impl Mul for DenseOperator {
    type Output = DenseOperator;

    fn mul(self, rhs: DenseOperator) -> DenseOperator {
        DenseOperator { mat: self.mat * rhs.mat }
    }
}

/// A normalized complex state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<C64>,
}

impl StateVector {
    /// Builds a state from raw amplitudes, normalizing them.
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        let v = DVector::from_vec(amps);
        let norm = v.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidArgument("state vector has zero or non-finite norm".into()));
        }
        Ok(StateVector { amps: v / C64::new(norm, 0.0) })
    }

    /// Wraps amplitudes that are already normalized (checked to 1e-10).
    pub fn from_normalized(amps: Vec<C64>) -> Self {
        let v = DVector::from_vec(amps);
        debug_assert!((v.norm() - 1.0).abs() < 1e-10);
        StateVector { amps: v }
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = DVector::zeros(dim);
        v[k] = ONE;
        StateVector { amps: v }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn get(&self, k: usize) -> C64 {
        self.amps[k]
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amps.dotc(&other.amps)
    }

    pub fn kron(&self, other: &StateVector) -> StateVector {
        StateVector { amps: self.amps.kronecker(&other.amps) }
    }

    pub fn scale(&self, c: C64) -> StateVector {
        StateVector { amps: &self.amps * c }
    }

    /// `|self><self|`.
    pub fn projector(&self) -> DenseOperator {
        DenseOperator::from_matrix(&self.amps * self.amps.adjoint())
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Distance to `other` after removing the best global phase.
    pub fn distance_up_to_phase(&self, other: &StateVector) -> f64 {
        let overlap = other.inner(self);
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { ONE };
        self.max_abs_diff(&other.scale(phase))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_dimensions_and_trace() {
        let a = DenseOperator::maximally_mixed(3);
        let b = DenseOperator::maximally_mixed(2);
        let ab = a.kron(&b);
        assert_eq!(ab.dim(), 6);
        assert!(ab.has_unit_trace(1e-12));
        assert!(ab.is_density_matrix(1e-12));
    }

    #[test]
    fn spectral_norm_of_diagonal() {
        let d = DenseOperator::diagonal(&[C64::new(3.0, 0.0), ONE, C64::new(-5.0, 0.0)]);
        assert!((d.spectral_norm() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn random_density_is_state() {
        let rho = DenseOperator::random_density(6, 2, 3);
        assert!(rho.is_density_matrix(1e-12));
        assert_eq!(rho.max_abs_diff(&DenseOperator::random_density(6, 2, 3)), 0.0);
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(StateVector::new(vec![ZERO, ZERO]).is_err());
    }

    #[test]
    fn distance_ignores_global_phase() {
        let v = StateVector::new(vec![ONE, C64::new(0.0, 1.0)]).unwrap();
        let w = v.scale(C64::from_polar(1.0, 0.7));
        assert!(v.distance_up_to_phase(&w) < 1e-12);
    }
}
