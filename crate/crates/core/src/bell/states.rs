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

use crate::dense::{DenseOperator, Limits, StateVector, C64, ZERO};
use crate::error::{Error, Result};
use crate::weyl::arith::is_prime;
use crate::weyl::Phase;

/// Label `(I, q)` of the generalized Bell state `|phi_{I,q}>` on `d` qudits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BellLabel {
    d: usize,
    i: Vec<usize>,
    q: usize,
}

impl BellLabel {
    pub fn new(d: usize, i: Vec<usize>, q: usize) -> Result<Self> {
        if !is_prime(d) {
            return Err(Error::InvalidLabel(format!("Bell states need a prime dimension, got {d}")));
        }
        if i.len() != d - 1 || i.iter().any(|&v| v >= d) || q >= d {
            return Err(Error::InvalidLabel(format!("bad Bell label I={i:?} q={q} for d={d}")));
        }
        Ok(BellLabel { d, i, q })
    }

    /// All `d^d` labels with `I` in lexicographic order, `q` fastest.
    pub fn all(d: usize) -> Result<Vec<BellLabel>> {
        let count = d.pow(d as u32 - 1);
        let mut out = Vec::with_capacity(count * d);
        for idx in 0..count {
            let i = digits(idx, d, d - 1);
            for q in 0..d {
                out.push(BellLabel::new(d, i.clone(), q)?);
            }
        }
        Ok(out)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `|I| mod d`.
    pub fn s(&self) -> usize {
        self.i.iter().sum::<usize>() % self.d
    }
}

/// Base-`d` digits of `idx`, most significant first.
pub(crate) fn digits(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// `|phi_{I,q}> = (1/sqrt d) sum_k omega^{kq} |(0,I) + k(1,...,1)>`.
pub fn bell_state(label: &BellLabel) -> StateVector {
    let d = label.d;
    let mut amps = vec![ZERO; d.pow(d as u32)];
    let norm = 1.0 / (d as f64).sqrt();
    for k in 0..d {
        let idx = std::iter::once(0)
            .chain(label.i.iter().copied())
            .fold(0, |acc, v| acc * d + (v + k) % d);
        amps[idx] = Phase::root((k * label.q) as i64, d, d).to_complex() * norm;
    }
    StateVector::from_normalized(amps)
}

/// `Pi_{s,q}`: sum of Bell projectors with `|I| = s mod d` and the given `q`.
pub fn coarse_projector(d: usize, s: usize, q: usize, limits: &Limits) -> Result<DenseOperator> {
    if s >= d || q >= d {
        return Err(Error::InvalidLabel(format!("coarse outcome ({s},{q}) out of range for d={d}")));
    }
    limits.check_dense(d.pow(d as u32))?;
    let dim = d.pow(d as u32);
    let mut acc = DMatrix::from_element(dim, dim, ZERO);
    for label in BellLabel::all(d)?.into_iter().filter(|l| l.s() == s && l.q == q) {
        let v = bell_state(&label);
        acc += v.amplitudes() * v.amplitudes().adjoint();
    }
    Ok(DenseOperator::from_matrix(acc))
}

/// Eigenvalue `omega^{b s - a q}` of `(X^a Z^b)^{⊗d}` on the block `Pi_{s,q}`.
pub fn coarse_eigenvalue(d: usize, a: usize, b: usize, s: usize, q: usize) -> Phase {
    Phase::root((b * s) as i64 - (a * q) as i64, d, d)
}

/// `tr(Pi_{s,q} (M_1 ⊗ ... ⊗ M_p))` for every `(s, q)`, stored at `s * p + q`.
///
/// Uses the `p` nonzero amplitudes of each Bell state instead of the dense projector.
pub(crate) fn cluster_trace(p: usize, mats: &[&DMatrix<C64>]) -> Vec<C64> {
    debug_assert_eq!(mats.len(), p);
    let mut out = vec![ZERO; p * p];
    let roots: Vec<C64> = (0..p).map(|k| Phase::root(k as i64, p, p).to_complex()).collect();
    let mut prod = vec![ZERO; p * p];
    let mut by_shift = vec![ZERO; p];
    let count = p.pow(p as u32 - 1);
    for idx in 0..count {
        let i = digits(idx, p, p - 1);
        let s = i.iter().sum::<usize>() % p;
        for k in 0..p {
            for kp in 0..p {
                let mut acc = mats[0][(k, kp)];
                for (j, m) in mats[1..].iter().enumerate() {
                    acc *= m[((i[j] + k) % p, (i[j] + kp) % p)];
                }
                prod[k * p + kp] = acc;
            }
        }
        // group by kp - k so each q needs one pass over p values
        by_shift.iter_mut().for_each(|v| *v = ZERO);
        for k in 0..p {
            for kp in 0..p {
                by_shift[(kp + p - k) % p] += prod[k * p + kp];
            }
        }
        for q in 0..p {
            let mut acc = ZERO;
            for (delta, v) in by_shift.iter().enumerate() {
                acc += roots[(delta * q) % p] * v;
            }
            out[s * p + q] += acc / p as f64;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{boost, shift};

    fn tensor_power(op: &DenseOperator, k: usize) -> DenseOperator {
        DenseOperator::kron_all(std::iter::repeat(op).take(k))
    }

    #[test]
    fn x_and_z_eigenvalues_qutrit() {
        let d = 3;
        let (xx, zz) = (tensor_power(&shift(d), d), tensor_power(&boost(d), d));
        for label in BellLabel::all(d).unwrap() {
            let v = bell_state(&label);
            let wq = Phase::root(-(label.q() as i64), d, d).to_complex();
            assert!(xx.apply(&v).max_abs_diff(&v.scale(wq)) < 1e-12);
            let ws = Phase::root(label.s() as i64, d, d).to_complex();
            assert!(zz.apply(&v).max_abs_diff(&v.scale(ws)) < 1e-12);
        }
    }

    #[test]
    fn gram_is_identity() {
        for d in [2, 3] {
            let labels = BellLabel::all(d).unwrap();
            assert_eq!(labels.len(), d.pow(d as u32));
            let states: Vec<_> = labels.iter().map(bell_state).collect();
            for (a, u) in states.iter().enumerate() {
                for (b, v) in states.iter().enumerate() {
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!((u.inner(v) - C64::new(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn projectors_complete() {
        let d = 3;
        let mut sum = DenseOperator::zeros(27);
        for s in 0..d {
            for q in 0..d {
                let p = coarse_projector(d, s, q, &Limits::default()).unwrap();
                assert!((p.trace().re - 3.0).abs() < 1e-12);
                assert!((&p * &p).max_abs_diff(&p) < 1e-12);
                assert!(p.is_hermitian(1e-12));
                sum = sum.add(&p);
            }
        }
        assert!(sum.max_abs_diff(&DenseOperator::identity(27)) < 1e-12);
    }

    #[test]
    fn cluster_trace_matches_dense() {
        let d = 3;
        let mats: Vec<DMatrix<C64>> = (0..d)
            .map(|j| DMatrix::from_fn(d, d, |r, c| C64::new((r + 2 * c + j) as f64, (r * c) as f64 - 1.0)))
            .collect();
        let refs: Vec<&DMatrix<C64>> = mats.iter().collect();
        let fast = cluster_trace(d, &refs);
        let full = DenseOperator::kron_all(mats.iter().map(|m| DenseOperator::from_matrix(m.clone())).collect::<Vec<_>>().iter());
        for s in 0..d {
            for q in 0..d {
                let proj = coarse_projector(d, s, q, &Limits::default()).unwrap();
                let slow = (&proj * &full).trace();
                assert!((slow - fast[s * d + q]).norm() < 1e-9);
            }
        }
    }
}
