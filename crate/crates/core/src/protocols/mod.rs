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

//! Multi-copy amplitude estimation, the many-versus-one task and the single-copy baseline.

mod amplitude;
mod task;

pub use amplitude::{
    amplitude_estimation, hoeffding_sample_bound, mixed_amplitude_estimation, AmplitudeTable, SampleMode,
};
pub use task::{
    distinguish, guess_code, guess_from_code, random_guess, single_copy_cover, single_copy_trial, spiked_moment,
    spiked_state, theoretical_hit_probability, theoretical_single_copy_nmin, Decision, Hypothesis, TaskInstance,
};
