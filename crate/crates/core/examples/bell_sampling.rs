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

//! Coarse Bell sampling of three copies of a planted qutrit state and
//! moment reconstruction from the outcomes.

use whamp::bell::{outcome_distribution, reconstruct_moment, sample_outcomes, StateSpec};
use whamp::protocols::spiked_moment;
use whamp::weyl::DimVector;
use whamp::{Limits, Result, WeylString};

fn main() -> Result<()> {
    let limits = Limits::default();
    let w = WeylString::from_pairs(3, &[(1, 2), (2, 1)])?;
    let dims = DimVector::uniform(3, 2)?;
    let spec = StateSpec::Spiked { w: w.clone(), eps: 0.3 };
    let dist = outcome_distribution(&spec, &dims, &limits)?;
    println!("{} coarse outcomes, representation {:?}", dist.num_outcomes(), dist.representation());

    let samples = sample_outcomes(&dist, 4000, 42);
    println!("first outcome: {:?}", samples[0].pairs);

    for v in [w.clone(), w.adjoint().normalized(), WeylString::from_pairs(3, &[(1, 0), (0, 0)])?] {
        let est = reconstruct_moment(dist.layout(), &samples, &v)?;
        let exact = spiked_moment(&w, 0.3, &v, 3)?;
        println!("{v}: estimate {est:.3}, exact {exact:.3}");
    }
    Ok(())
}
