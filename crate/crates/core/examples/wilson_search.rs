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

//! Wilson-interval certification and the exponential/bisection `N_min` search
//! on a toy experiment whose success probability is `1 - exp(-N / 40)`.

use rand::Rng;
use whamp::seed;
use whamp::stats::{certify_at_n, nmin_search, wilson_interval, WilsonConfig};
use whamp::Result;

fn main() -> Result<()> {
    let (lo, hi) = wilson_interval(160, 200, 1.6449)?;
    println!("160/200 successes: Wilson interval [{lo:.4}, {hi:.4}]");

    let oracle = |n: usize, s: u64| seed::rng(s).random::<f64>() < 1.0 - (-(n as f64) / 40.0).exp();
    let cfg = WilsonConfig::default();
    let at_100 = certify_at_n(&oracle, 100, &cfg, 1)?;
    println!("N=100: {:?} after {} trials, p_hat {:.3}", at_100.verdict, at_100.t, at_100.p_hat());

    let res = nmin_search(&oracle, &cfg, 1)?;
    println!("N_min = {} (exact threshold {:.1})", res.n_min, -40.0 * 0.3f64.ln());
    println!("trajectory: {:?}", res.trajectory);
    Ok(())
}
