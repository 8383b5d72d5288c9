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

use crate::dense::{DenseOperator, Limits, C64, ZERO};
use crate::error::{Error, Result};

use super::ir::{Circuit, Gate, GateKind, QubitBase, QuditOp, WireKind};
use super::unitary::circuit_unitary;

/// `arccos(1 / sqrt 3)`
pub fn h3_angle() -> f64 {
    (1.0 / 3f64.sqrt()).acos()
}

/// Qutrit `H` on the qubit pair `(hi, lo)`.
pub fn h3_sequence(hi: usize, lo: usize, theta: f64) -> Vec<Gate> {
    vec![
        Gate::qubit(&[true], QubitBase::X, &[hi, lo], &[]),
        Gate::qubit(&[true], QubitBase::Hz, &[lo, hi], &[]),
        Gate::qubit(&[false], QubitBase::Ry, &[hi, lo], &[-theta]),
        Gate::qubit(&[true], QubitBase::NegSdg, &[lo, hi], &[]),
        Gate::qubit(&[false], QubitBase::Ry, &[hi, lo], &[theta]),
        Gate::qubit(&[true], QubitBase::Zh, &[lo, hi], &[]),
        Gate::qubit(&[true], QubitBase::X, &[hi, lo], &[]),
    ]
}

/// Qutrit shift `X` on `(hi, lo)`.
pub fn x3_sequence(hi: usize, lo: usize) -> Vec<Gate> {
    vec![
        Gate::qubit(&[false], QubitBase::X, &[hi, lo], &[]),
        Gate::qubit(&[false], QubitBase::X, &[lo, hi], &[]),
    ]
}

/// Qutrit `CX` with control pair `(c0, c1)` and target pair `(t0, t1)`.
pub fn cx3_sequence(c0: usize, c1: usize, t0: usize, t1: usize) -> Vec<Gate> {
    vec![
        Gate::qubit(&[true, false], QubitBase::X, &[c1, t0, t1], &[]),
        Gate::qubit(&[true, false], QubitBase::X, &[c1, t1, t0], &[]),
        Gate::qubit(&[true, false], QubitBase::X, &[c0, t1, t0], &[]),
        Gate::qubit(&[true, false], QubitBase::X, &[c0, t0, t1], &[]),
    ]
}

fn adjoint_sequence(gates: Vec<Gate>) -> Vec<Gate> {
    gates.iter().rev().map(Gate::adjoint).collect()
}

/// Rewrites a qutrit circuit over qubit pairs: wire `w` becomes qubits `2w` (high bit) and `2w + 1`.
pub fn transpile_qutrit_to_qubit(c: &Circuit) -> Result<Circuit> {
    if c.kind() != WireKind::Qudit(3) {
        return Err(Error::InvalidArgument(format!("expected a qutrit circuit, got {:?}", c.kind())));
    }
    let mut out = Circuit::new(WireKind::Qubit, 2 * c.wires())?;
    let theta = h3_angle();
    for g in c.gates() {
        let GateKind::Qudit(op) = g.kind else { unreachable!() };
        let pair = |k: usize| (2 * g.targets[k], 2 * g.targets[k] + 1);
        let seq = match op {
            QuditOp::H | QuditOp::Hdg => h3_sequence(pair(0).0, pair(0).1, theta),
            QuditOp::X | QuditOp::Xdg => x3_sequence(pair(0).0, pair(0).1),
            QuditOp::Cx | QuditOp::Cxdg => cx3_sequence(pair(0).0, pair(0).1, pair(1).0, pair(1).1),
            other => return Err(Error::UnknownGate(format!("no qubit decomposition for qutrit `{}`", other.name()))),
        };
        let seq = if matches!(op, QuditOp::Hdg | QuditOp::Xdg | QuditOp::Cxdg) { adjoint_sequence(seq) } else { seq };
        out.extend(seq)?;
    }
    Ok(out)
}

/// Comparison of a qubit circuit against a qutrit circuit on the embedded subspace.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// `max |V_restricted - e^{i phi} U|` after fitting the global phase.
    pub residual: f64,
    pub global_phase: C64,
    /// Largest weight an embedded basis state sends outside the embedded subspace.
    pub leakage: f64,
    pub tolerance: f64,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance && self.leakage <= self.tolerance
    }
}

/// Qubit index of the qutrit basis index, with `0 -> 00`, `1 -> 01`, `2 -> 10` per wire.
pub fn embed_index(mut idx: usize, wires: usize) -> usize {
    let mut out = 0;
    for w in 0..wires {
        out += (idx % 3) << (2 * w);
        idx /= 3;
    }
    out
}

pub fn verify_embedding(qutrit: &Circuit, qubit: &Circuit, limits: &Limits) -> Result<EmbeddingReport> {
    if qutrit.kind() != WireKind::Qudit(3) || qubit.kind() != WireKind::Qubit || qubit.wires() != 2 * qutrit.wires() {
        return Err(Error::DimensionMismatch("need a qutrit circuit and a qubit circuit on twice the wires".into()));
    }
    let u = circuit_unitary(qutrit, limits)?;
    let v = circuit_unitary(qubit, limits)?;
    let m = qutrit.wires();
    let emb: Vec<usize> = (0..u.dim()).map(|i| embed_index(i, m)).collect();
    let restricted = DenseOperator::from_fn(u.dim(), |r, c| v.get(emb[r], emb[c]));
    let overlap: C64 = (0..u.dim())
        .flat_map(|r| (0..u.dim()).map(move |c| (r, c)))
        .map(|(r, c)| u.get(r, c).conj() * restricted.get(r, c))
        .fold(ZERO, |a, b| a + b);
    let global_phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { C64::new(1.0, 0.0) };
    let residual = restricted.max_abs_diff(&u.scale(global_phase));
    let leakage = (0..u.dim())
        .map(|c| 1.0 - (0..u.dim()).map(|r| restricted.get(r, c).norm_sqr()).sum::<f64>())
        .fold(0.0, f64::max);
    Ok(EmbeddingReport { residual, global_phase, leakage, tolerance: 1e-10 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::bell_measurement_circuit;

    fn single(op: QuditOp, targets: &[usize], wires: usize) -> Circuit {
        let mut c = Circuit::new(WireKind::Qudit(3), wires).unwrap();
        c.push(Gate::qudit(op, targets)).unwrap();
        c
    }

    #[test]
    fn gate_sequences_match() {
        let limits = Limits::default();
        for (op, targets, wires, len) in [
            (QuditOp::X, vec![0], 1, 2),
            (QuditOp::Xdg, vec![0], 1, 2),
            (QuditOp::H, vec![0], 1, 7),
            (QuditOp::Hdg, vec![0], 1, 7),
            (QuditOp::Cx, vec![0, 1], 2, 4),
            (QuditOp::Cxdg, vec![1, 0], 2, 4),
        ] {
            let c = single(op, &targets, wires);
            let q = transpile_qutrit_to_qubit(&c).unwrap();
            assert_eq!(q.len(), len);
            let report = verify_embedding(&c, &q, &limits).unwrap();
            assert!(report.passed(), "{op:?}: {report:?}");
        }
        let x = single(QuditOp::X, &[0], 1);
        let report = verify_embedding(&x, &transpile_qutrit_to_qubit(&x).unwrap(), &limits).unwrap();
        assert!((report.global_phase - C64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn full_measurement_circuit() {
        let limits = Limits::default();
        let c = bell_measurement_circuit(3, 1).unwrap();
        let q = transpile_qutrit_to_qubit(&c).unwrap();
        assert_eq!(q.len(), 2 * 4 + 7);
        assert!(verify_embedding(&c, &q, &limits).unwrap().residual < 1e-9);
    }

    #[test]
    fn corrupted_angle_fails() {
        let limits = Limits::default();
        let c = single(QuditOp::H, &[0], 1);
        let mut q = Circuit::new(WireKind::Qubit, 2).unwrap();
        q.extend(h3_sequence(0, 1, h3_angle() + 0.01)).unwrap();
        let report = verify_embedding(&c, &q, &limits).unwrap();
        assert!(!report.passed());
        assert!(report.residual > 1e-3);
    }

    #[test]
    fn unsupported_gate() {
        let c = single(QuditOp::S, &[0], 1);
        assert!(matches!(transpile_qutrit_to_qubit(&c), Err(Error::UnknownGate(_))));
        assert!((h3_angle() - 0.955317).abs() < 1e-6);
    }
}
