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

//! Wilson intervals, the three-way stopping rule and `N_min` searches.

mod search;
mod wilson;

pub use search::{certify_at_n, empirical_nmin, geometric_grid, nmin_search, EmpiricalNmin, NminResult, SuccessOracle};
pub use wilson::{normal_quantile, wilson_interval, wilson_verdict, Verdict, WilsonConfig, WilsonDecision};
