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

//! Qudit and qubit circuits, Bell-measurement synthesis and qutrit transpilation.

mod ir;
mod synth;
mod transpile;
mod unitary;

pub use ir::{Circuit, Gate, GateKind, QubitBase, QuditOp, WireKind};
pub use synth::{bell_measurement_circuit, bell_wire, decode_bell_readout, decode_measurement};
pub use transpile::{
    cx3_sequence, embed_index, h3_angle, h3_sequence, transpile_qutrit_to_qubit, verify_embedding, x3_sequence,
    EmbeddingReport,
};
pub use unitary::{circuit_unitary, gate_matrix, qubit_base_matrix, ry};
