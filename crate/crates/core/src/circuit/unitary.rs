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

use crate::dense::{DenseOperator, Limits, C64, ONE, ZERO};
use crate::error::{Error, Result};
use crate::weyl::{controlled_x, hadamard, phase_gate, shift, boost};

use super::ir::{Circuit, Gate, GateKind, QubitBase, QuditOp};

/// Standard `Ry(theta) = exp(-i theta Y / 2)`.
pub fn ry(theta: f64) -> DenseOperator {
    let (s, c) = (theta / 2.0).sin_cos();
    let m = DMatrix::from_row_slice(2, 2, &[C64::new(c, 0.0), C64::new(-s, 0.0), C64::new(s, 0.0), C64::new(c, 0.0)]);
    DenseOperator::from_matrix(m)
}

fn two(a: C64, b: C64, c: C64, d: C64) -> DenseOperator {
    DenseOperator::from_matrix(DMatrix::from_row_slice(2, 2, &[a, b, c, d]))
}

pub fn qubit_base_matrix(base: QubitBase, params: &[f64]) -> DenseOperator {
    let i = C64::new(0.0, 1.0);
    let r = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let h = two(r, r, r, -r);
    let z = two(ONE, ZERO, ZERO, -ONE);
    match base {
        QubitBase::H => h,
        QubitBase::X => two(ZERO, ONE, ONE, ZERO),
        QubitBase::Y => two(ZERO, -i, i, ZERO),
        QubitBase::Z => z,
        QubitBase::S => two(ONE, ZERO, ZERO, i),
        QubitBase::Sdg => two(ONE, ZERO, ZERO, -i),
        QubitBase::NegS => two(-ONE, ZERO, ZERO, -i),
        QubitBase::NegSdg => two(-ONE, ZERO, ZERO, i),
        QubitBase::Hz => &z * &h,
        QubitBase::Zh => &h * &z,
        QubitBase::Ry => ry(params[0]),
    }
}

fn qudit_matrix(op: QuditOp, d: usize) -> DenseOperator {
    match op {
        QuditOp::H => hadamard(d),
        QuditOp::S => phase_gate(d),
        QuditOp::X => shift(d),
        QuditOp::Z => boost(d),
        QuditOp::Cx => controlled_x(d),
        other => qudit_matrix(other.adjoint(), d).adjoint(),
    }
}

/// Matrix of `gate` on its own wires, first target most significant.
pub fn gate_matrix(gate: &Gate, wire_dim: usize) -> DenseOperator {
    match &gate.kind {
        GateKind::Qudit(op) => qudit_matrix(*op, wire_dim),
        GateKind::Qubit { controls, base } => {
            let u = qubit_base_matrix(*base, &gate.params);
            let k = controls.len();
            let active = controls.iter().fold(0usize, |acc, &c| acc * 2 + usize::from(c));
            DenseOperator::from_fn(2 << k, |r, c| {
                if r >> 1 == active && c >> 1 == active {
                    u.get(r & 1, c & 1)
                } else if r == c {
                    ONE
                } else {
                    ZERO
                }
            })
        }
    }
}

/// Left-multiplies `state` (columns are states on all wires) by `gate`.
fn apply_gate(m: &mut DMatrix<C64>, gate: &Gate, wire_dim: usize, wires: usize) {
    let local = gate_matrix(gate, wire_dim);
    let ld = local.dim();
    let strides: Vec<usize> = gate.targets.iter().map(|&t| wire_dim.pow((wires - 1 - t) as u32)).collect();
    let offsets: Vec<usize> = (0..ld)
        .map(|l| {
            let mut rem = l;
            let mut off = 0;
            for s in strides.iter().rev() {
                off += (rem % wire_dim) * s;
                rem /= wire_dim;
            }
            off
        })
        .collect();
    let total = m.nrows();
    let mut buf = vec![ZERO; ld];
    for base in 0..total {
        if strides.iter().any(|&s| (base / s) % wire_dim != 0) {
            continue;
        }
        for col in 0..m.ncols() {
            for (l, slot) in buf.iter_mut().enumerate() {
                *slot = (0..ld).map(|k| local.get(l, k) * m[(base + offsets[k], col)]).sum();
            }
            for (l, v) in buf.iter().enumerate() {
                m[(base + offsets[l], col)] = *v;
            }
        }
    }
}

/// Ordered product of the gate matrices, first gate applied first.
pub fn circuit_unitary(c: &Circuit, limits: &Limits) -> Result<DenseOperator> {
    let dim = (c.wire_dim() as u128)
        .checked_pow(c.wires() as u32)
        .filter(|&v| v <= limits.dense_dim as u128)
        .ok_or(Error::DenseCapExceeded { dim: usize::MAX, cap: limits.dense_dim })? as usize;
    limits.check_dense(dim)?;
    let mut m = DMatrix::identity(dim, dim);
    for g in c.gates() {
        apply_gate(&mut m, g, c.wire_dim(), c.wires());
    }
    Ok(DenseOperator::from_matrix(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::ir::WireKind;

    #[test]
    fn empty_and_single() {
        let limits = Limits::default();
        let c = Circuit::new(WireKind::Qudit(3), 2).unwrap();
        assert!(circuit_unitary(&c, &limits).unwrap().max_abs_diff(&DenseOperator::identity(9)) < 1e-15);
        let mut h = Circuit::new(WireKind::Qudit(3), 1).unwrap();
        h.push(Gate::qudit(QuditOp::H, &[0])).unwrap();
        assert!(circuit_unitary(&h, &limits).unwrap().max_abs_diff(&hadamard(3)) < 1e-15);
    }

    #[test]
    fn wire_order_and_inverse() {
        let limits = Limits::default();
        let mut c = Circuit::new(WireKind::Qudit(3), 3).unwrap();
        c.extend([
            Gate::qudit(QuditOp::Cx, &[2, 0]),
            Gate::qudit(QuditOp::H, &[1]),
            Gate::qudit(QuditOp::S, &[2]),
            Gate::qudit(QuditOp::Cxdg, &[0, 1]),
        ])
        .unwrap();
        let u = circuit_unitary(&c, &limits).unwrap();
        assert!(u.is_unitary(1e-12));
        let mut round = c.clone();
        round.extend(c.adjoint().gates().iter().cloned()).unwrap();
        assert!(circuit_unitary(&round, &limits).unwrap().max_abs_diff(&DenseOperator::identity(27)) < 1e-12);
        // CX with control on wire 1 and target on wire 0 sends |0,1> to |1,1>
        let mut rev = Circuit::new(WireKind::Qudit(3), 2).unwrap();
        rev.push(Gate::qudit(QuditOp::Cx, &[1, 0])).unwrap();
        assert!((circuit_unitary(&rev, &limits).unwrap().get(4, 1) - ONE).norm() < 1e-15);
    }

    #[test]
    fn controlled_qubit_gates() {
        let limits = Limits::default();
        let mut c = Circuit::new(WireKind::Qubit, 2).unwrap();
        c.push(Gate::qubit(&[false], QubitBase::X, &[0, 1], &[])).unwrap();
        let u = circuit_unitary(&c, &limits).unwrap();
        assert!((u.get(1, 0) - ONE).norm() < 1e-15);
        assert!((u.get(2, 2) - ONE).norm() < 1e-15);
        let a = qubit_base_matrix(QubitBase::Hz, &[]);
        let b = qubit_base_matrix(QubitBase::Zh, &[]);
        assert!((&a * &b).max_abs_diff(&DenseOperator::identity(2)) < 1e-15);
        assert!((&ry(0.4) * &ry(-0.4)).max_abs_diff(&DenseOperator::identity(2)) < 1e-15);
    }
}
