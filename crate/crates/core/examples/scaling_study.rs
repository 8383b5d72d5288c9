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

//! A short scaling study written to CSV in the temp directory.
//!
//! The full `n = 1..6` study is `whamp scaling --seed 1`.

use whamp::experiment::{run_scaling, ExperimentConfig, Strategy};
use whamp::Result;

fn main() -> Result<()> {
    let cfg = ExperimentConfig {
        n_max: 3,
        seed: 1,
        out: std::env::temp_dir().join("whamp_scaling.csv"),
        strategy: Strategy::Both,
        ..Default::default()
    };
    let report = run_scaling(&cfg, |row| println!("{row:?}"))?;
    println!("{}", std::fs::read_to_string(&report.csv)?);
    Ok(())
}
