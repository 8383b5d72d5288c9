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

//! Weyl strings, their products and commutation phases, plus the MUB picture in `d = 3`.
//!
//! ```bash
//! cargo run --example weyl_algebra
//! ```

use whamp::weyl::{hadamard, mub_bases, shift, boost, DimVector, MubLabel, generator};
use whamp::{Limits, Result, WeylString};

fn main() -> Result<()> {
    let limits = Limits::default();
    let a = WeylString::from_pairs(3, &[(1, 0), (0, 2)])?;
    let b = WeylString::from_pairs(3, &[(0, 1), (1, 1)])?;
    println!("A = {a}\nB = {b}");
    println!("AB = {}", a.multiply(&b)?);
    println!("BA = {}", b.multiply(&a)?);
    println!("AB(BA)^-1 phase = {:?}", a.commutator(&b)?.to_complex());
    println!("A^3 identity: {}", a.pow(3).is_identity());

    let rho = whamp::DenseOperator::maximally_mixed(9);
    println!("tr(A rho) for the mixed state = {:.3}", a.expectation(&rho)?.norm());

    let dims = DimVector::uniform(3, 2)?;
    let count = whamp::weyl::string_count(&dims, false);
    println!("{count} phase-one strings on {dims}");

    // H maps the X eigenbasis onto the Z eigenbasis
    let h = hadamard(3);
    let conj = &(&h * &shift(3)) * &h.adjoint();
    println!("|H X H^dagger - Z| = {:.1e}", conj.max_abs_diff(&boost(3)));

    for (label, basis) in mub_bases(3)? {
        let g = generator(3, label)?;
        let overlap = basis[0].inner(&mub_bases(3)?[0].1[0]).norm_sqr();
        println!("basis {label:?}: generator {g}, |<psi|e_0>|^2 = {overlap:.4}");
    }
    let _ = (MubLabel::Infinity, &limits);
    Ok(())
}
