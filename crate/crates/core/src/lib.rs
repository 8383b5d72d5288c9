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

//! Weyl–Heisenberg amplitude estimation with multi-copy Bell measurements.

pub mod bell;
pub mod circuit;
pub mod dense;
pub mod error;
pub mod experiment;
pub mod mimic;
pub mod protocols;
pub mod seed;
pub mod stats;
pub mod theory;
pub mod weyl;

pub use dense::{DenseOperator, Limits, StateVector, C64};
pub use error::{Error, Result};
pub use weyl::{DimVector, Phase, WeylString};
