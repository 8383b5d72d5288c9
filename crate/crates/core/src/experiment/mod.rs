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

//! Scaling study and verification suites behind the `whamp` binary.

mod config;
mod scaling;
mod verify;

pub use config::{ExperimentConfig, Strategy};
pub use scaling::{
    meta_path, run_scaling, scaling_rows, single_copy_experiment_trial, three_copy_trial, write_rows, ScalingReport,
    ScalingRow,
};
pub use verify::{run_verification, Check, Suite, VerificationReport};
