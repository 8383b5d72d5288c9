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

use crate::bell::{BellLabel, CoarseOutcome};
use crate::error::{Error, Result};
use crate::weyl::arith::is_prime;

use super::ir::{Circuit, Gate, QuditOp, WireKind};

/// Wire holding copy `copy` of site `site` when `n` sites are copied `d` times.
pub fn bell_wire(n: usize, copy: usize, site: usize) -> usize {
    copy * n + site
}

/// Coarse Bell measurement on `d` copies of `n` qudits: per site a `CX^dagger` cascade then `H` on copy 0.
///
/// Copy `k` of site `i` lives on wire `k n + i`.
pub fn bell_measurement_circuit(d: usize, n: usize) -> Result<Circuit> {
    if !is_prime(d) {
        return Err(Error::InvalidDims(format!("Bell circuits need a prime dimension, got {d}")));
    }
    let mut c = Circuit::new(WireKind::Qudit(d), d * n)?;
    for site in 0..n {
        for k in (1..d).rev() {
            c.push(Gate::qudit(QuditOp::Cxdg, &[bell_wire(n, k - 1, site), bell_wire(n, k, site)]))?;
        }
        c.push(Gate::qudit(QuditOp::H, &[bell_wire(n, 0, site)]))?;
    }
    Ok(c)
}

/// Bell label from the computational-basis readout `y` of one cluster.
pub fn decode_bell_readout(d: usize, y: &[usize]) -> Result<BellLabel> {
    if y.len() != d || y.iter().any(|&v| v >= d) {
        return Err(Error::InvalidLabel(format!("readout {y:?} for d={d}")));
    }
    let q = (d - y[0]) % d;
    let mut acc = 0;
    let i = y[1..]
        .iter()
        .map(|&v| {
            acc = (acc + v) % d;
            acc
        })
        .collect();
    BellLabel::new(d, i, q)
}

/// Coarse outcome `(s, q)` per site from a full readout indexed by wire.
pub fn decode_measurement(d: usize, n: usize, readout: &[usize]) -> Result<CoarseOutcome> {
    if readout.len() != d * n {
        return Err(Error::DimensionMismatch(format!("{} readout digits for {} wires", readout.len(), d * n)));
    }
    let pairs = (0..n)
        .map(|site| {
            let y: Vec<usize> = (0..d).map(|k| readout[bell_wire(n, k, site)]).collect();
            decode_bell_readout(d, &y).map(|l| (l.s(), l.q()))
        })
        .collect::<Result<_>>()?;
    Ok(CoarseOutcome { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::bell_state;
    use crate::circuit::circuit_unitary;
    use crate::dense::{DenseOperator, Limits};
    use crate::weyl::{enumerate_strings, DimVector};

    fn digits(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = idx % d;
            idx /= d;
        }
        out
    }

    #[test]
    fn gate_counts() {
        let one = bell_measurement_circuit(3, 1).unwrap();
        assert_eq!((one.len(), one.wires()), (3, 3));
        let four = bell_measurement_circuit(3, 4).unwrap();
        assert_eq!(four.len(), 12);
        assert_eq!(four.depth(), one.depth());
        let qubit = bell_measurement_circuit(2, 1).unwrap();
        assert_eq!(qubit.gates().iter().map(|g| g.name()).collect::<Vec<_>>(), ["cxdg", "h"]);
    }

    #[test]
    fn maps_bell_states_to_readouts() {
        let limits = Limits::default();
        for d in [2, 3, 5] {
            let u = circuit_unitary(&bell_measurement_circuit(d, 1).unwrap(), &limits).unwrap();
            let step = if d == 5 { 97 } else { 1 };
            for label in BellLabel::all(d).unwrap().into_iter().step_by(step) {
                let out = u.apply(&bell_state(&label));
                let (idx, amp) = out
                    .amplitudes()
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
                    .unwrap();
                assert!((amp.norm() - 1.0).abs() < 1e-10);
                assert_eq!(decode_bell_readout(d, &digits(idx, d, d)).unwrap(), label);
            }
        }
    }

    #[test]
    fn diagonalizes_tensor_powers() {
        let limits = Limits::default();
        for d in [2, 3] {
            let u = circuit_unitary(&bell_measurement_circuit(d, 1).unwrap(), &limits).unwrap();
            let dims = DimVector::uniform(d, 1).unwrap();
            for w in enumerate_strings(&dims, false, &limits).unwrap() {
                let m = w.to_matrix(&limits).unwrap();
                let power = DenseOperator::kron_all(std::iter::repeat_n(&m, d));
                let conj = &(&u * &power) * &u.adjoint();
                assert!(conj.off_diagonal_mass() < 1e-10);
            }
        }
    }

    #[test]
    fn decodes_parallel_clusters() {
        let out = decode_measurement(3, 2, &[2, 0, 1, 1, 1, 2]).unwrap();
        // site 0 reads (2, 1, 1), site 1 reads (0, 1, 2)
        assert_eq!(out.pairs, vec![(0, 1), (1, 0)]);
    }
}
