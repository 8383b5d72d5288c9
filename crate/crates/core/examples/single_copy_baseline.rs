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

//! Single-copy baseline: guessing the hidden string from the `{1,2}` guess set.

use whamp::experiment::single_copy_experiment_trial;
use whamp::protocols::{theoretical_hit_probability, theoretical_single_copy_nmin};
use whamp::Result;

fn main() -> Result<()> {
    for n in 1..=4 {
        let closed = theoretical_single_copy_nmin(n, 0.7);
        let trials = 2000;
        let hits = (0..trials).filter(|&s| single_copy_experiment_trial(n, closed as usize, s).unwrap_or(false)).count();
        println!(
            "n={n}: N_min {closed}, predicted p {:.3}, observed {:.3}",
            theoretical_hit_probability(n, closed),
            hits as f64 / trials as f64
        );
    }
    Ok(())
}
