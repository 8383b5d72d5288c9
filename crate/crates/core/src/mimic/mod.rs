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

//! Mimicking states and phase recovery.

mod mmw;
mod phases;

pub use mmw::{
    build_mimicking_state, eigen_distribution, gibbs_state, hermitian_part, iteration_cap, step_size,
    violation_search, ExactOracle, ExpectationOracle, MimickingRun, MimickingStep, Part, SampledOracle,
};
pub use phases::{phase_error_bound, recover_phases, ExpectationTable, Provenance};
