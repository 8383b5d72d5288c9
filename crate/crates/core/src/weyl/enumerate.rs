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

use std::collections::HashSet;

use crate::dense::Limits;
use crate::error::{Error, Result};

use super::arith::{is_prime, smallest_prime_factor};
use super::{DimVector, WeylString};

/// Per-site `(x, z)` choices, in lexicographic order.
fn site_choices(d: usize, reduced: bool) -> Vec<(usize, usize)> {
    let lo = if reduced && d != 2 { 1 } else { 0 };
    (lo..d).flat_map(|x| (0..d).map(move |z| (x, z))).collect()
}

/// Number of strings `enumerate_strings` would yield.
pub fn string_count(dims: &DimVector, reduced: bool) -> u128 {
    dims.iter().map(|d| site_choices(d, reduced).len() as u128).product()
}

/// Odometer over Weyl strings, site 0 most significant.
#[derive(Debug, Clone)]
pub struct StringIter {
    dims: DimVector,
    choices: Vec<Vec<(usize, usize)>>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for StringIter {
    type Item = WeylString;

    fn next(&mut self) -> Option<WeylString> {
        if self.done {
            return None;
        }
        let (x, z) = self
            .counter
            .iter()
            .zip(&self.choices)
            .map(|(&c, ch)| ch[c])
            .unzip();
        let out = WeylString::new(self.dims.clone(), x, z).unwrap();
        self.done = true;
        for site in (0..self.counter.len()).rev() {
            self.counter[site] += 1;
            if self.counter[site] < self.choices[site].len() {
                self.done = false;
                break;
            }
            self.counter[site] = 0;
        }
        Some(out)
    }
}

/// Every projective representative (phase 1) of `W^{⊗n}`, or of the reduced
/// set where each site has a nonzero shift exponent (all four Paulis on qubit sites).
pub fn enumerate_strings(dims: &DimVector, reduced: bool, limits: &Limits) -> Result<StringIter> {
    let count = string_count(dims, reduced);
    if count > limits.enumeration as u128 {
        return Err(Error::EnumerationCapExceeded { count, cap: limits.enumeration as u128 });
    }
    let choices: Vec<_> = dims.iter().map(|d| site_choices(d, reduced)).collect();
    Ok(StringIter {
        dims: dims.clone(),
        counter: vec![0; choices.len()],
        done: choices.iter().any(|c| c.is_empty()),
        choices,
    })
}

/// Classes of mutually `p_min`-fold commuting strings for composite `d`.
#[derive(Debug, Clone)]
pub struct CommutingPartition {
    pub d: usize,
    pub q: usize,
    /// `classes[k]` holds the non-identity powers of `W_a = ⊗ X Z^{a_i}` with `|a| ≡ k mod q`.
    pub classes: Vec<Vec<WeylString>>,
    /// Reduced strings that lie in no cyclic group `<W_a>`.
    pub uncovered: Vec<WeylString>,
}

impl CommutingPartition {
    pub fn covered_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Partition of the cyclic groups `<W_a>` over `a ∈ Z_d^n` by `|a| mod q`, `d = p_min q`.
///
/// A string reachable from several generators is kept in the lowest class.
pub fn commuting_partition(d: usize, n: usize, limits: &Limits) -> Result<CommutingPartition> {
    if d < 2 || is_prime(d) {
        return Err(Error::PrimeDimension(d));
    }
    let dims = DimVector::uniform(d, n)?;
    let count = string_count(&dims, true);
    if count > limits.enumeration as u128 {
        return Err(Error::EnumerationCapExceeded { count, cap: limits.enumeration as u128 });
    }
    let q = d / smallest_prime_factor(d);
    let generators: Vec<Vec<usize>> = enumerate_strings(&DimVector::uniform(d, n)?, false, limits)?
        .filter(|w| w.x().iter().all(|&x| x == 0))
        .map(|w| w.z().to_vec())
        .collect();
    let mut seen = HashSet::new();
    let mut classes = vec![Vec::new(); q];
    for (k, class) in classes.iter_mut().enumerate() {
        for a in generators.iter().filter(|a| a.iter().sum::<usize>() % q == k) {
            let gen = WeylString::new(dims.clone(), vec![1; n], a.clone())?;
            let mut power = gen.clone();
            for _ in 1..d {
                let rep = power.normalized();
                if seen.insert(rep.lex_index()) {
                    class.push(rep);
                }
                power = power.multiply(&gen)?;
            }
        }
    }
    let uncovered = enumerate_strings(&dims, true, limits)?
        .filter(|w| !seen.contains(&w.lex_index()))
        .collect();
    Ok(CommutingPartition { d, q, classes, uncovered })
}
