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

//! Composite dimensions: the square-free `(2, 3)` construction with six
//! copies, and the commuting partition of `d = 6` strings.

use whamp::bell::StateSpec;
use whamp::protocols::{mixed_amplitude_estimation, SampleMode};
use whamp::theory::mixed_twirl_norm;
use whamp::weyl::{commuting_partition, DimVector};
use whamp::{DenseOperator, Limits, Result, WeylString};

fn main() -> Result<()> {
    let limits = Limits::default();
    let dims = DimVector::new(vec![2, 3])?;
    let w = WeylString::new(dims.clone(), vec![1, 1], vec![0, 2])?;
    let rho = DenseOperator::maximally_mixed(6).add(&w.to_matrix(&limits)?.add(&w.adjoint().to_matrix(&limits)?).scale((0.1 / 6.0).into()));
    let table = mixed_amplitude_estimation(&StateSpec::Dense(rho.clone()), &[2, 3], 1, SampleMode::Exact, 0, &limits)?;
    println!("copies used: {}", table.copies());
    println!("u({w}) = {:.4}, exact {:.4}", table.get(&w), w.expectation(&rho)?.norm());

    for m in [1, 2, 3, 6] {
        let (raw, normalized) = mixed_twirl_norm(&[2, 3], m)?;
        println!("m={m}: twirl norm {raw}, normalized {normalized:.3}");
    }

    let part = commuting_partition(6, 1, &limits)?;
    println!("d=6: {} classes covering {} strings, {} uncovered", part.classes.len(), part.covered_count(), part.uncovered.len());
    Ok(())
}
