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

//! Algorithm 1: build a mimicking state for a planted two-qutrit state,
//! then recover the phases of `tr(W rho)` on one qutrit.

use whamp::mimic::{build_mimicking_state, phase_error_bound, recover_phases, ExactOracle, SampledOracle};
use whamp::protocols::{spiked_state, AmplitudeTable, SampleMode};
use whamp::weyl::DimVector;
use whamp::{Limits, Result, WeylString};

fn main() -> Result<()> {
    let limits = Limits::default();
    let eps = 0.3;
    let w = WeylString::from_pairs(3, &[(1, 1), (0, 2)])?;
    let rho = spiked_state(&w, eps, &limits)?;
    let u = AmplitudeTable::exact_from_state(&rho, w.dims(), &limits)?;

    let run = build_mimicking_state(&u, &mut ExactOracle { rho: rho.clone() }, eps, &limits)?.into_result()?;
    println!("T = {}, beta = {:.4}, iterations {}", run.t_cap, run.beta, run.iterations());
    println!("|tr(W sigma)| = {:.4} (needs >= {:.2})", w.expectation(&run.sigma)?.norm(), eps / 3.0);

    let mut sampled = SampledOracle::for_algorithm(rho.clone(), eps, run.t_cap, 9);
    println!("sampled oracle batch per step: {}", sampled.batch());
    let noisy = build_mimicking_state(&u, &mut sampled, eps, &limits)?;
    println!("sampled run clean exit: {} after {} steps", noisy.terminated_early, noisy.iterations());

    let v = WeylString::from_pairs(3, &[(1, 2)])?;
    let rho1 = spiked_state(&v, eps, &limits)?;
    let u1 = AmplitudeTable::exact_from_state(&rho1, &DimVector::uniform(3, 1)?, &limits)?;
    let sigma = build_mimicking_state(&u1, &mut ExactOracle { rho: rho1.clone() }, eps, &limits)?.sigma;
    let table = recover_phases(&sigma, &rho1, &u1, eps, SampleMode::Exact, 0, &limits)?;
    for (s, est, prov) in table.iter() {
        println!("{s}: {est:.4} [{prov:?}] exact {:.4}", s.expectation(&rho1)?);
    }
    println!("max error {:.2e}, bound {:.2}", table.max_error(&rho1)?, phase_error_bound(3, eps));
    Ok(())
}
