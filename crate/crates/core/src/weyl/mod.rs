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

//! Weyl–Heisenberg algebra over mixed local dimensions.

pub mod arith;
mod clifford;
mod dims;
mod enumerate;
mod mub;
mod phase;
mod string;

pub use clifford::{boost, clifford_gate, controlled_x, hadamard, phase_gate, shift, CliffordGate};
pub use dims::DimVector;
pub use enumerate::{commuting_partition, enumerate_strings, string_count, CommutingPartition, StringIter};
pub use mub::{generator, mub_bases, mub_state, MubLabel};
pub use phase::Phase;
pub use string::{multiply, weyl_matrix, WeylString};
