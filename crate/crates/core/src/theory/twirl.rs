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

use rand::Rng as _;

use crate::dense::{Limits, C64};
use crate::error::{Error, Result};
use crate::seed;
use crate::weyl::arith::{is_prime, mod_inverse};
use crate::weyl::{enumerate_strings, DimVector, Phase, WeylString};

use super::SparseOperator;

/// `tau ∈ {+1, -1}^{2m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern(Vec<i8>);

impl SignPattern {
    pub fn new(tau: Vec<i8>) -> Result<Self> {
        if tau.is_empty() || tau.len() % 2 != 0 || tau.iter().any(|&t| t != 1 && t != -1) {
            return Err(Error::InvalidArgument(format!("sign pattern must be an even-length ±1 vector, got {tau:?}")));
        }
        Ok(SignPattern(tau))
    }

    pub fn all_plus(m: usize) -> Self {
        SignPattern(vec![1; 2 * m])
    }

    /// Every pattern of length `2m`, in binary order with `+1` first.
    pub fn all(m: usize) -> Vec<SignPattern> {
        (0..1u64 << (2 * m))
            .map(|bits| SignPattern((0..2 * m).map(|i| if bits >> (2 * m - 1 - i) & 1 == 0 { 1 } else { -1 }).collect()))
            .collect()
    }

    pub fn random(m: usize, rng: &mut seed::Rng) -> Self {
        SignPattern((0..2 * m).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect())
    }

    pub fn m(&self) -> usize {
        self.0.len() / 2
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        SignPattern(self.0.iter().map(|t| -t).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwirlMethod {
    /// Sum the `d(d-1)` tensor powers `W^{⊗tau}` directly.
    Brute,
    /// Permutation structure of the closed-form expression (odd primes).
    Explicit,
}

/// `M_tau = sum_{W in reduced set} W^{tau_1} ⊗ ... ⊗ W^{tau_2m}` with `W^{-1} = W^dagger`.
pub fn twirl_operator(d: usize, tau: &SignPattern, method: TwirlMethod, limits: &Limits) -> Result<SparseOperator> {
    if !is_prime(d) {
        return Err(Error::InvalidArgument(format!("twirl operators need a prime dimension, got {d}")));
    }
    let len = tau.0.len();
    let dim = (d as u128).pow(len as u32);
    if dim > usize::MAX as u128 {
        return Err(Error::SparseCapExceeded { nnz: usize::MAX, cap: limits.sparse_nnz });
    }
    let dim = dim as usize;
    match method {
        TwirlMethod::Brute => brute(d, tau, dim, limits),
        TwirlMethod::Explicit => explicit(d, tau, dim, limits),
    }
}

fn brute(d: usize, tau: &SignPattern, dim: usize, limits: &Limits) -> Result<SparseOperator> {
    let site = DimVector::uniform(d, 1)?;
    let reps: Vec<WeylString> = enumerate_strings(&site, true, limits)?.map(|w| w.cyclic_representative()).collect();
    let nnz = reps.len().saturating_mul(dim);
    if nnz > limits.sparse_nnz {
        return Err(Error::SparseCapExceeded { nnz, cap: limits.sparse_nnz });
    }
    let dims = DimVector::uniform(d, tau.0.len())?;
    let l = dims.phase_modulus();
    let mut entries = Vec::with_capacity(nnz);
    for r in &reps {
        let ra = r.adjoint();
        let mut num = 0i64;
        let (mut x, mut z) = (Vec::new(), Vec::new());
        for &t in &tau.0 {
            let f = if t == 1 { r } else { &ra };
            x.push(f.x()[0]);
            z.push(f.z()[0]);
            num += f.phase().numerator() as i64;
        }
        let w = WeylString::new(dims.clone(), x, z)?.with_phase(Phase::new(num, l));
        for col in 0..dim {
            let (row, ph) = w.act_on_basis(col);
            entries.push((row, col, ph.to_complex()));
        }
    }
    SparseOperator::from_triplets(dim, entries, limits)
}

fn explicit(d: usize, tau: &SignPattern, dim: usize, limits: &Limits) -> Result<SparseOperator> {
    if d == 2 {
        return Err(Error::InvalidArgument("the explicit twirl formula covers odd primes only".into()));
    }
    let len = tau.0.len();
    let m = tau.m();
    let sum: i64 = tau.0.iter().map(|&t| t as i64).sum();
    let kappa = (sum / 2).rem_euclid(d as i64) as usize;
    let taus: Vec<usize> = tau.0.iter().map(|&t| if t == 1 { 1 } else { d - 1 }).collect();
    let divisible = m % d == 0;
    let per_col = if divisible { d - 1 } else { 1 };
    let estimate = dim / d * per_col * if divisible { 1 } else { d - 1 };
    if estimate > limits.sparse_nnz {
        return Err(Error::SparseCapExceeded { nnz: estimate, cap: limits.sparse_nnz });
    }
    let m_inv = if divisible { 0 } else { mod_inverse(m % d, d).unwrap() };
    let weight = C64::new(d as f64, 0.0);
    let mut digits = vec![0usize; len];
    let mut entries = Vec::with_capacity(estimate);
    let shifted = |digits: &[usize], a: usize| -> usize {
        digits.iter().zip(&taus).fold(0, |acc, (&j, &t)| acc * d + (j + a * t) % d)
    };
    for col in 0..dim {
        let mut rem = col;
        for slot in digits.iter_mut().rev() {
            *slot = rem % d;
            rem /= d;
        }
        let t_val = digits.iter().zip(&taus).map(|(&j, &t)| j * t).sum::<usize>() % d;
        if divisible {
            if t_val == kappa {
                for a in 1..d {
                    entries.push((shifted(&digits, a), col, weight));
                }
            }
        } else if t_val != kappa {
            let a = m_inv * ((kappa + d - t_val) % d) % d;
            entries.push((shifted(&digits, a), col, weight));
        }
    }
    SparseOperator::from_triplets(dim, entries, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_equals_explicit_qutrit() {
        let limits = Limits::default();
        for m in 1..=2 {
            for tau in SignPattern::all(m) {
                let b = twirl_operator(3, &tau, TwirlMethod::Brute, &limits).unwrap();
                let e = twirl_operator(3, &tau, TwirlMethod::Explicit, &limits).unwrap();
                assert!(b.max_abs_diff(&e) < 1e-12, "{tau:?}");
            }
        }
    }

    #[test]
    fn adjoint_flips_signs() {
        let limits = Limits::default();
        for tau in SignPattern::all(2) {
            let a = twirl_operator(3, &tau, TwirlMethod::Brute, &limits).unwrap();
            let b = twirl_operator(3, &tau.negated(), TwirlMethod::Brute, &limits).unwrap();
            assert!(a.adjoint().max_abs_diff(&b) < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_patterns() {
        assert!(SignPattern::new(vec![1]).is_err());
        assert!(SignPattern::new(vec![1, 0]).is_err());
        assert!(twirl_operator(2, &SignPattern::all_plus(1), TwirlMethod::Explicit, &Limits::default()).is_err());
    }
}
