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

use std::fmt;

use crate::dense::{StateVector, C64};
use crate::error::{Error, Result};

use super::arith::is_prime;
use super::{DimVector, Phase, WeylString};

/// Label of a cyclic subgroup `W_a = <X Z^a>`, with `Infinity` standing for `<Z>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MubLabel {
    Finite(usize),
    Infinity,
}

impl MubLabel {
    /// All `d + 1` labels for an odd prime, or `{0, Infinity}` for qubits.
    pub fn all(d: usize) -> Vec<MubLabel> {
        let finite = if d == 2 { 1 } else { d };
        (0..finite).map(MubLabel::Finite).chain(std::iter::once(MubLabel::Infinity)).collect()
    }
}

impl fmt::Display for MubLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MubLabel::Finite(a) => write!(f, "{a}"),
            MubLabel::Infinity => write!(f, "inf"),
        }
    }
}

fn check_label(d: usize, a: MubLabel) -> Result<()> {
    if !is_prime(d) {
        return Err(Error::InvalidLabel(format!("MUB states need a prime dimension, got {d}")));
    }
    match a {
        MubLabel::Finite(a) if a >= d => Err(Error::InvalidLabel(format!("a = {a} out of range for d = {d}"))),
        MubLabel::Finite(a) if d == 2 && a != 0 => {
            Err(Error::InvalidLabel("qubits only support a in {0, inf}".into()))
        }
        _ => Ok(()),
    }
}

/// The single-site generator `W_a` (`X Z^a`, or `Z` for `a = inf`).
pub fn generator(d: usize, a: MubLabel) -> Result<WeylString> {
    check_label(d, a)?;
    let dims = DimVector::uniform(d, 1)?;
    match a {
        MubLabel::Finite(a) => WeylString::new(dims, vec![1], vec![a]),
        MubLabel::Infinity => WeylString::new(dims, vec![0], vec![1]),
    }
}

/// Eigenvector of `W_a` with eigenvalue `omega^j`:
/// `(1/sqrt d) sum_k omega^{-jk + a k(k-1)/2} |k>`, or `|j>` for `a = inf`.
pub fn mub_state(d: usize, a: MubLabel, j: usize) -> Result<StateVector> {
    check_label(d, a)?;
    if j >= d {
        return Err(Error::InvalidLabel(format!("j = {j} out of range for d = {d}")));
    }
    let a = match a {
        MubLabel::Infinity => return Ok(StateVector::basis(d, j)),
        MubLabel::Finite(a) => a,
    };
    let norm = 1.0 / (d as f64).sqrt();
    let amps: Vec<C64> = (0..d)
        .map(|k| {
            let e = -((j * k) as i64) + (a * (k * k.saturating_sub(1) / 2)) as i64;
            Phase::root(e, d, d).to_complex() * norm
        })
        .collect();
    Ok(StateVector::from_normalized(amps))
}

/// All `d + 1` bases (two for qubits), each as `d` states.
pub fn mub_bases(d: usize) -> Result<Vec<(MubLabel, Vec<StateVector>)>> {
    MubLabel::all(d)
        .into_iter()
        .map(|a| Ok((a, (0..d).map(|j| mub_state(d, a, j)).collect::<Result<Vec<_>>>()?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_matrix;

    #[test]
    fn infinity_is_computational() {
        let s = mub_state(3, MubLabel::Infinity, 1).unwrap();
        assert!(s.max_abs_diff(&StateVector::basis(3, 1)) < 1e-15);
    }

    #[test]
    fn eigen_relation() {
        for d in [3, 5] {
            for a in MubLabel::all(d) {
                let w = weyl_matrix(&generator(d, a).unwrap()).unwrap();
                for k in 0..d {
                    let wk = w.pow(k);
                    for j in 0..d {
                        let psi = mub_state(d, a, j).unwrap();
                        let expect = psi.scale(Phase::root((k * j) as i64, d, d).to_complex());
                        assert!(wk.apply(&psi).max_abs_diff(&expect) < 1e-12, "d={d} a={a} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn mutually_unbiased() {
        for d in [3, 5] {
            let bases = mub_bases(d).unwrap();
            for (ia, (_, ba)) in bases.iter().enumerate() {
                for (ib, (_, bb)) in bases.iter().enumerate() {
                    for (j, u) in ba.iter().enumerate() {
                        for (l, v) in bb.iter().enumerate() {
                            let o = u.inner(v).norm_sqr();
                            let expect = if ia == ib { if j == l { 1.0 } else { 0.0 } } else { 1.0 / d as f64 };
                            assert!((o - expect).abs() < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn qubit_labels() {
        assert!(mub_state(2, MubLabel::Finite(1), 0).is_err());
        let plus = mub_state(2, MubLabel::Finite(0), 0).unwrap();
        assert!((plus.get(1).re - plus.get(0).re).abs() < 1e-15);
        assert!(mub_state(4, MubLabel::Finite(0), 0).is_err());
        assert!(mub_state(3, MubLabel::Finite(3), 0).is_err());
    }
}
