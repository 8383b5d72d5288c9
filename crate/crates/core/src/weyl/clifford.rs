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

use crate::dense::{DenseOperator, C64, ONE, ZERO};

use super::Phase;

/// Single- and two-qudit Clifford generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H,
    S,
    CX,
}

/// Defining matrix of a Clifford generator.
///
/// For `d = 2` the `S` gate is the usual `diag(1, i)`.
pub fn clifford_gate(d: usize, which: CliffordGate) -> DenseOperator {
    match which {
        CliffordGate::H => hadamard(d),
        CliffordGate::S => phase_gate(d),
        CliffordGate::CX => controlled_x(d),
    }
}

/// `H = (1/sqrt d) sum_{k,j} omega^{kj} |k><j|`.
pub fn hadamard(d: usize) -> DenseOperator {
    let norm = 1.0 / (d as f64).sqrt();
    DenseOperator::from_fn(d, |k, j| Phase::root((k * j) as i64, d, d).to_complex() * norm)
}

/// `S = sum_j omega^{j(j-1)/2} |j><j|`.
pub fn phase_gate(d: usize) -> DenseOperator {
    if d == 2 {
        return DenseOperator::diagonal(&[ONE, C64::new(0.0, 1.0)]);
    }
    let diag: Vec<C64> = (0..d)
        .map(|j| Phase::root((j * j.saturating_sub(1) / 2) as i64, d, d).to_complex())
        .collect();
    DenseOperator::diagonal(&diag)
}

/// `CX = sum_{k,l} |k><k| ⊗ |k+l><l|`, control on the left factor.
pub fn controlled_x(d: usize) -> DenseOperator {
    let mut m = nalgebra::DMatrix::from_element(d * d, d * d, ZERO);
    for k in 0..d {
        for l in 0..d {
            m[(k * d + (k + l) % d, k * d + l)] = ONE;
        }
    }
    DenseOperator::from_matrix(m)
}

/// Shift `X = sum_k |k+1><k|`.
pub fn shift(d: usize) -> DenseOperator {
    DenseOperator::from_fn(d, |r, c| if r == (c + 1) % d { ONE } else { ZERO })
}

/// Boost `Z = sum_k omega^k |k><k|`.
pub fn boost(d: usize) -> DenseOperator {
    let diag: Vec<C64> = (0..d).map(|k| Phase::root(k as i64, d, d).to_complex()).collect();
    DenseOperator::diagonal(&diag)
}
