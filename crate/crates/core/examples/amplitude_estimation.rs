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

//! Amplitude estimation for all `81` two-qutrit strings from one shared
//! pool of Bell outcomes, sized by the Hoeffding bound.

use whamp::bell::StateSpec;
use whamp::protocols::{amplitude_estimation, hoeffding_sample_bound, AmplitudeTable, SampleMode};
use whamp::weyl::DimVector;
use whamp::{Limits, Result, WeylString};

fn main() -> Result<()> {
    let limits = Limits::default();
    let (d, n, eps, delta) = (3, 2, 0.3, 0.3);
    let dims = DimVector::uniform(d, n)?;
    let w = WeylString::from_pairs(3, &[(0, 1), (2, 2)])?;
    let spec = StateSpec::Spiked { w: w.clone(), eps: 0.2 };

    let budget = hoeffding_sample_bound(d, n, eps, delta)?;
    println!("Hoeffding budget for eps={eps}, delta={delta}: N = {budget}");

    let exact = amplitude_estimation(&spec, &dims, SampleMode::Exact, 0, &limits)?;
    let est: AmplitudeTable = amplitude_estimation(&spec, &dims, SampleMode::Samples(budget as usize), 7, &limits)?;
    let worst = exact.values().iter().zip(est.values()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("max |u_W - |tr(W rho)|| over all strings: {worst:.4}");
    if let Some((top, u)) = est.argmax() {
        println!("largest estimated amplitude: {top} with u = {u:.3} (planted {w})");
    }
    Ok(())
}
