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

//! Small integer helpers for modular arithmetic over local dimensions.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Smallest prime factor of `n >= 2`.
pub fn smallest_prime_factor(n: usize) -> usize {
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return k;
        }
        k += 1;
    }
    n
}

/// Reduces a possibly negative integer into `[0, m)`.
pub fn modulo(a: i64, m: usize) -> usize {
    a.rem_euclid(m as i64) as usize
}

/// Multiplicative inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    let (mut old_r, mut r) = ((a % m) as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(modulo(old_s, m))
}

/// `phi(p)` as used for the mixed-dimension twirl: `p - 1` for odd primes and `2` for `p = 2`.
pub fn twirl_phi(p: usize) -> usize {
    if p == 2 {
        2
    } else {
        p - 1
    }
}
