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

//! Numerical oracles for the hardness side: twirling norms, divergences and bounds.

mod formulas;
mod sparse;
mod twirl;

pub use formulas::{
    chi_squared, constrained_fourier_sum, delta_bound, lower_bound_samples, mixed_twirl_norm, twirl_norm_formula,
    DeltaBound, FourierSum,
};
pub use sparse::{operator_norm, power_iteration_norm, NormOptions, SparseOperator};
pub use twirl::{twirl_operator, SignPattern, TwirlMethod};
