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
use rand_distr::{Binomial, Distribution};

use crate::dense::{DenseOperator, Limits, C64, ZERO};
use crate::error::{Error, Result};
use crate::protocols::AmplitudeTable;
use crate::seed;
use crate::weyl::{enumerate_strings, WeylString};

/// `T = floor(75 n / eps^2) + 2`.
pub fn iteration_cap(n: usize, eps: f64) -> usize {
    (75.0 * n as f64 / (eps * eps)).floor() as usize + 2
}

/// `beta = sqrt(n / T)`.
pub fn step_size(n: usize, t_cap: usize) -> f64 {
    (n as f64 / t_cap as f64).sqrt()
}

/// First string in lexicographic order with `u_W >= eps` and `||tr(W sigma)| - u_W| >= 2 eps / 3`.
pub fn violation_search(u: &AmplitudeTable, sigma: &DenseOperator, eps: f64) -> Result<Option<WeylString>> {
    for (w, uw) in u.iter().skip(1) {
        if uw < eps {
            continue;
        }
        if (w.expectation(sigma)?.norm() - uw).abs() >= 2.0 * eps / 3.0 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `exp(-beta sum_t M_t) / tr(...)` through a Hermitian eigendecomposition.
pub fn gibbs_state(ms: &[DenseOperator], beta: f64, dim: usize, limits: &Limits) -> Result<DenseOperator> {
    limits.check_dense(dim)?;
    if ms.is_empty() {
        return Ok(DenseOperator::maximally_mixed(dim));
    }
    let mut h = DMatrix::from_element(dim, dim, ZERO);
    for m in ms {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch(format!("update of dimension {} for {dim}", m.dim())));
        }
        if !m.is_hermitian(1e-10) {
            return Err(Error::InvalidArgument("Gibbs updates must be Hermitian".into()));
        }
        h += m.matrix();
    }
    gibbs_from_hamiltonian(&h, beta)
}

fn gibbs_from_hamiltonian(h: &DMatrix<C64>, beta: f64) -> Result<DenseOperator> {
    let herm = (h + h.adjoint()) * C64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = eig.eigenvalues.iter().map(|&l| (-beta * (l - min)).exp()).collect();
    let z: f64 = weights.iter().sum();
    let v = &eig.eigenvectors;
    let scaled = DMatrix::from_fn(v.nrows(), v.ncols(), |r, c| v[(r, c)] * (weights[c] / z));
    let sigma = &scaled * v.adjoint();
    let sigma = (&sigma + sigma.adjoint()) * C64::new(0.5, 0.0);
    Ok(DenseOperator::from_matrix(sigma))
}

/// Source of the step-3a estimates `z_t ≈ tr(W_t rho)`.
pub trait ExpectationOracle {
    fn estimate(&mut self, w: &WeylString, step: usize) -> Result<C64>;
}

/// Returns `tr(W rho)` exactly.
#[derive(Debug, Clone)]
pub struct ExactOracle {
    pub rho: DenseOperator,
}

impl ExpectationOracle for ExactOracle {
    fn estimate(&mut self, w: &WeylString, _step: usize) -> Result<C64> {
        w.expectation(&self.rho)
    }
}

/// Measures `W` in its eigenbasis on fresh copies of `rho` and averages the eigenvalues.
///
/// The batch size makes each of the real and imaginary parts `accuracy / sqrt 2`
/// accurate with failure probability at most `failure` by Hoeffding.
#[derive(Debug, Clone)]
pub struct SampledOracle {
    rho: DenseOperator,
    batch: u64,
    seed: u64,
}

impl SampledOracle {
    pub fn new(rho: DenseOperator, accuracy: f64, failure: f64, seed: u64) -> Self {
        let c = accuracy / 2f64.sqrt();
        let batch = (2.0 * (4.0 / failure).ln() / (c * c)).ceil() as u64;
        SampledOracle { rho, batch, seed }
    }

    /// Configured for Algorithm 1: accuracy `eps / 25`, failure `0.01 / T`.
    pub fn for_algorithm(rho: DenseOperator, eps: f64, t_cap: usize, seed: u64) -> Self {
        SampledOracle::new(rho, eps / 25.0, 0.01 / t_cap as f64, seed)
    }

    pub fn batch(&self) -> u64 {
        self.batch
    }
}

/// Eigenvalues `lambda_k` of a Weyl string and `p_k = tr(P_k rho)`.
pub fn eigen_distribution(w: &WeylString, rho: &DenseOperator) -> Result<Vec<(C64, f64)>> {
    let order = w.dims().lcm();
    let top = w.pow(order);
    debug_assert!(top.is_identity());
    let mu = C64::from_polar(1.0, top.scalar().arg() / order as f64);
    let moments: Vec<C64> = (0..order).map(|j| w.pow(j).expectation(rho)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(order);
    for k in 0..order {
        let lambda = mu * C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / order as f64);
        let p: C64 = moments
            .iter()
            .enumerate()
            .map(|(j, m)| lambda.powu(j as u32).conj() * m)
            .sum::<C64>()
            / order as f64;
        out.push((lambda, p.re.max(0.0)));
    }
    let total: f64 = out.iter().map(|(_, p)| p).sum();
    out.iter_mut().for_each(|(_, p)| *p /= total);
    Ok(out)
}

impl ExpectationOracle for SampledOracle {
    fn estimate(&mut self, w: &WeylString, step: usize) -> Result<C64> {
        let dist = eigen_distribution(w, &self.rho)?;
        let mut rng = seed::derived_rng(self.seed, &[step as u64]);
        // multinomial draw as a chain of conditional binomials
        let mut remaining = self.batch;
        let mut mass = 1.0;
        let mut acc = ZERO;
        for (i, (lambda, p)) in dist.iter().enumerate() {
            let count = if i + 1 == dist.len() || mass <= 0.0 {
                remaining
            } else {
                let q = (p / mass).clamp(0.0, 1.0);
                Binomial::new(remaining, q)
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?
                    .sample(&mut rng)
            };
            acc += lambda * count as f64;
            remaining -= count;
            mass -= p;
        }
        Ok(acc / self.batch as f64)
    }
}

/// Which Hermitian part of `W_t` drove an update.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Re,
    Im,
}

#[derive(Debug, Clone)]
pub struct MimickingStep {
    pub t: usize,
    pub w: WeylString,
    pub part: Part,
    pub sign: f64,
    pub z: C64,
    /// `tr(W_t sigma_t)`
    pub y: C64,
}

#[derive(Debug, Clone)]
pub struct MimickingRun {
    pub t_cap: usize,
    pub beta: f64,
    pub trace: Vec<MimickingStep>,
    pub sigma: DenseOperator,
    /// Exited through the no-violation branch.
    pub terminated_early: bool,
}

impl MimickingRun {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }

    pub fn into_result(self) -> Result<MimickingRun> {
        if self.terminated_early {
            Ok(self)
        } else {
            Err(Error::MimickingNotTerminated(self.t_cap))
        }
    }

    /// `max_{u_W >= eps} (eps / 3 - |tr(W sigma)|)`, nonpositive when the output contract holds.
    pub fn contract_gap(&self, u: &AmplitudeTable, eps: f64) -> Result<f64> {
        let mut worst = f64::NEG_INFINITY;
        for (w, uw) in u.iter().skip(1) {
            if uw >= eps {
                worst = worst.max(eps / 3.0 - w.expectation(&self.sigma)?.norm());
            }
        }
        Ok(worst)
    }
}

/// `(W + W^dagger) / 2` or `(W - W^dagger) / 2i`.
pub fn hermitian_part(w: &DenseOperator, part: Part) -> DenseOperator {
    let wd = w.adjoint();
    match part {
        Part::Re => w.add(&wd).scale(C64::new(0.5, 0.0)),
        Part::Im => w.sub(&wd).scale(C64::new(0.0, -0.5)),
    }
}

/// Algorithm 1: multiplicative-weights search for `sigma` matching all large amplitudes.
pub fn build_mimicking_state(
    u: &AmplitudeTable,
    oracle: &mut dyn ExpectationOracle,
    eps: f64,
    limits: &Limits,
) -> Result<MimickingRun> {
    let dims = u.dims().clone();
    let dim = dims.total_dim().ok_or(Error::DenseCapExceeded { dim: usize::MAX, cap: limits.dense_dim })?;
    limits.check_dense(dim)?;
    enumerate_strings(&dims, false, limits)?;
    let n = dims.len();
    let t_cap = iteration_cap(n, eps);
    let beta = step_size(n, t_cap);
    let mut sigma = DenseOperator::maximally_mixed(dim);
    let mut h = DMatrix::from_element(dim, dim, ZERO);
    let mut trace = Vec::new();
    for t in 0..t_cap {
        let Some(w) = violation_search(u, &sigma, eps)? else {
            return Ok(MimickingRun { t_cap, beta, trace, sigma, terminated_early: true });
        };
        let z = oracle.estimate(&w, t)?;
        let y = w.expectation(&sigma)?;
        let diff = y - z;
        let (part, y_hat, z_hat) = if diff.re.abs() >= diff.im.abs() { (Part::Re, y.re, z.re) } else { (Part::Im, y.im, z.im) };
        let sign = if y_hat - z_hat >= 0.0 { 1.0 } else { -1.0 };
        let m = hermitian_part(&w.to_matrix(limits)?, part);
        h += m.matrix() * C64::new(sign, 0.0);
        sigma = gibbs_from_hamiltonian(&h, beta)?;
        trace.push(MimickingStep { t, w, part, sign, z, y });
    }
    let terminated_early = violation_search(u, &sigma, eps)?.is_none();
    Ok(MimickingRun { t_cap, beta, trace, sigma, terminated_early })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocols::spiked_state;
    use crate::weyl::{boost, DimVector};

    #[test]
    fn initialization_constants() {
        assert_eq!(iteration_cap(2, 0.3), 1668);
        assert!((step_size(2, 1668) - 0.0346).abs() < 1e-4);
    }

    #[test]
    fn gibbs_of_qutrit_boost() {
        let m = hermitian_part(&boost(3), Part::Re);
        let beta = 0.7;
        let sigma = gibbs_state(&[m], beta, 3, &Limits::default()).unwrap();
        assert!(sigma.is_density_matrix(1e-12));
        let raw: Vec<f64> = (0..3).map(|k| (-beta * (2.0 * std::f64::consts::PI * k as f64 / 3.0).cos()).exp()).collect();
        let z: f64 = raw.iter().sum();
        for k in 0..3 {
            assert!((sigma.get(k, k).re - raw[k] / z).abs() < 1e-12);
        }
        let empty = gibbs_state(&[], beta, 3, &Limits::default()).unwrap();
        assert!(empty.max_abs_diff(&DenseOperator::maximally_mixed(3)) < 1e-15);
    }

    #[test]
    fn maximally_mixed_needs_no_steps() {
        let limits = Limits::default();
        let dims = DimVector::uniform(3, 1).unwrap();
        let rho = DenseOperator::maximally_mixed(3);
        let u = AmplitudeTable::exact_from_state(&rho, &dims, &limits).unwrap();
        let run = build_mimicking_state(&u, &mut ExactOracle { rho }, 0.3, &limits).unwrap();
        assert!(run.terminated_early);
        assert_eq!(run.iterations(), 0);
    }

    #[test]
    fn planted_boost() {
        let limits = Limits::default();
        let w = WeylString::from_pairs(3, &[(0, 1)]).unwrap();
        let rho = spiked_state(&w, 0.3, &limits).unwrap();
        let u = AmplitudeTable::exact_from_state(&rho, w.dims(), &limits).unwrap();
        let run = build_mimicking_state(&u, &mut ExactOracle { rho }, 0.3, &limits).unwrap();
        assert!(run.terminated_early);
        assert!(w.expectation(&run.sigma).unwrap().norm() >= 0.1);
    }

    #[test]
    fn violation_cases() {
        let limits = Limits::default();
        let dims = DimVector::uniform(3, 1).unwrap();
        let mut values = vec![0.0; 9];
        values[0] = 1.0;
        let quiet = AmplitudeTable::from_values(dims.clone(), values.clone()).unwrap();
        assert!(violation_search(&quiet, &DenseOperator::maximally_mixed(3), 0.3).unwrap().is_none());
        values[5] = 0.9;
        let loud = AmplitudeTable::from_values(dims, values).unwrap();
        let hit = violation_search(&loud, &DenseOperator::maximally_mixed(3), 0.3).unwrap().unwrap();
        assert_eq!(hit.lex_index(), 5);
        let _ = limits;
    }

    #[test]
    fn eigen_distribution_sums() {
        let w = WeylString::from_pairs(3, &[(1, 1)]).unwrap();
        let rho = spiked_state(&w, 0.2, &Limits::default()).unwrap();
        let dist = eigen_distribution(&w, &rho).unwrap();
        let mean: C64 = dist.iter().map(|(l, p)| l * *p).sum();
        assert!((mean - w.expectation(&rho).unwrap()).norm() < 1e-12);
    }
}
