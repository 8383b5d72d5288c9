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

use std::f64::consts::PI;
use std::ops::Mul;

use crate::dense::C64;

use super::arith::modulo;

/// The root of unity `exp(2 pi i numerator / modulus)`, kept as exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    numerator: usize,
    modulus: usize,
}

impl Phase {
    pub fn one(modulus: usize) -> Self {
        assert!(modulus > 0);
        Phase { numerator: 0, modulus }
    }

    pub fn new(numerator: i64, modulus: usize) -> Self {
        assert!(modulus > 0);
        Phase { numerator: modulo(numerator, modulus), modulus }
    }

    /// `omega_d^k` written over `modulus`; `d` must divide `modulus`.
    pub fn root(k: i64, d: usize, modulus: usize) -> Self {
        assert_eq!(modulus % d, 0, "modulus {modulus} not divisible by {d}");
        Phase::new(k * (modulus / d) as i64, modulus)
    }

    pub fn numerator(&self) -> usize {
        self.numerator
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.numerator == 0
    }

    pub fn conj(&self) -> Self {
        Phase::new(-(self.numerator as i64), self.modulus)
    }

    pub fn pow(&self, k: u64) -> Self {
        let num = (self.numerator as u128 * k as u128) % self.modulus as u128;
        Phase { numerator: num as usize, modulus: self.modulus }
    }

    /// Exponent of this phase as a power of `omega_d`, if it is one.
    pub fn as_root_of(&self, d: usize) -> Option<usize> {
        let step = self.modulus / d;
        (self.modulus % d == 0 && self.numerator % step == 0).then(|| self.numerator / step)
    }

    pub fn to_complex(&self) -> C64 {
        C64::from_polar(1.0, 2.0 * PI * self.numerator as f64 / self.modulus as f64)
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        assert_eq!(self.modulus, rhs.modulus, "phase moduli differ");
        Phase::new((self.numerator + rhs.numerator) as i64, self.modulus)
    }
}
