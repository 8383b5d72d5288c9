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

//! Twirling norms by brute force and from the closed form, with the
//! chi-squared bound that makes `d - 1` copies insufficient.

use whamp::theory::{
    constrained_fourier_sum, delta_bound, lower_bound_samples, operator_norm, twirl_norm_formula, twirl_operator,
    NormOptions, SignPattern, TwirlMethod,
};
use whamp::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let opts = NormOptions::default();
    for m in 1..=3 {
        let tau = SignPattern::all_plus(m);
        let op = twirl_operator(3, &tau, TwirlMethod::Brute, &limits)?;
        println!("d=3 m={m}: ||M|| = {:.6} (formula {})", operator_norm(&op, &opts)?, twirl_norm_formula(3, m));
    }
    let op = twirl_operator(5, &SignPattern::new(vec![1, -1, 1, 1])?, TwirlMethod::Explicit, &limits)?;
    println!("d=5 m=2 mixed signs: ||M|| = {:.6}, nnz {}", operator_norm(&op, &opts)?, op.nnz());

    let b = delta_bound(3, 2, 0.3, 4)?;
    println!("delta bound d=3 c=2 eps=0.3 n=4: {:.4e} (relaxed {:.4e})", b.tight, b.relaxed);
    println!("implied sample lower bound: {:.1}", lower_bound_samples(3, 2, 0.3, 4)?);

    let s = constrained_fourier_sum(5, &[1, 2, 3], &[2, 4, 1])?;
    println!("constrained Fourier sum: brute {:.3}, closed {:.3}", s.brute, s.closed);
    Ok(())
}
