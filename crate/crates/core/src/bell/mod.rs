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

//! Generalized Bell states and the coarse `d^2`-outcome measurement on `d` copies.

mod distribution;
mod layout;
mod moments;
mod states;
mod transform;

pub use distribution::{
    outcome_distribution, outcome_distribution_with, sample_outcomes, spiked_eps_limit, spiked_expectation,
    OutcomeDistribution, Path, Representation, StateSpec,
};
pub(crate) use distribution::dense_spiked;
pub(crate) use transform::character_transform;
pub use layout::{Cluster, ClusterLayout, CoarseOutcome};
pub use moments::{all_moments, histogram, reconstruct_moment, reconstruct_moment_indices};
pub use states::{bell_state, coarse_eigenvalue, coarse_projector, BellLabel};
