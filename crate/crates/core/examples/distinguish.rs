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

//! Many-versus-one distinguishing: maximally mixed against a planted spike.

use whamp::protocols::{amplitude_estimation, distinguish, hoeffding_sample_bound, random_guess, SampleMode, TaskInstance};
use whamp::{seed, Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let (n, eps) = (2, 0.3);
    let budget = hoeffding_sample_bound(3, n, eps, 0.1)? as usize;
    let mut rng = seed::rng(3);
    for run in 0..4u64 {
        let task = if run % 2 == 0 {
            TaskInstance::null(3, n)?
        } else {
            TaskInstance::alternative(random_guess(n, &mut rng), eps)?
        };
        let table = amplitude_estimation(&task.state_spec(), &task.dims, SampleMode::Samples(budget), run, &limits)?;
        let decision = distinguish(&table, eps);
        println!(
            "run {run}: truth null={} decided null={} max u={:.3}",
            task.is_null(),
            decision.null,
            decision.max_amplitude
        );
    }
    Ok(())
}
