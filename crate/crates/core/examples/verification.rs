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

//! Verification suites as a library call.

use whamp::experiment::{run_verification, Suite};
use whamp::Result;

fn main() -> Result<()> {
    let report = run_verification(Suite::Algebra)?;
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
