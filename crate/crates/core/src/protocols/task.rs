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

use rand::Rng as _;

use crate::bell::{dense_spiked, spiked_eps_limit, StateSpec};
use crate::dense::{DenseOperator, Limits, C64};
use crate::error::{Error, Result};
use crate::seed;
use crate::weyl::{DimVector, WeylString};

use super::AmplitudeTable;

/// Which state the many-versus-one task hands out.
#[derive(Debug, Clone, PartialEq)]
pub enum Hypothesis {
    /// The maximally mixed state.
    Null,
    /// `rho_W^eps`.
    Alternative { w: WeylString, eps: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TaskInstance {
    pub dims: DimVector,
    pub hypothesis: Hypothesis,
}

impl TaskInstance {
    pub fn null(d: usize, n: usize) -> Result<Self> {
        Ok(TaskInstance { dims: DimVector::uniform(d, n)?, hypothesis: Hypothesis::Null })
    }

    pub fn alternative(w: WeylString, eps: f64) -> Result<Self> {
        if w.is_identity() {
            return Err(Error::InvalidArgument("the planted string must not be the identity".into()));
        }
        if !(eps > 0.0 && eps <= spiked_eps_limit(&w) + 1e-12) {
            return Err(Error::InvalidArgument(format!("eps = {eps} outside (0, {}]", spiked_eps_limit(&w))));
        }
        Ok(TaskInstance { dims: w.dims().clone(), hypothesis: Hypothesis::Alternative { w, eps } })
    }

    /// Fastest state description of the instance.
    pub fn state_spec(&self) -> StateSpec {
        match &self.hypothesis {
            Hypothesis::Null => StateSpec::Product(self.dims.iter().map(DenseOperator::maximally_mixed).collect()),
            Hypothesis::Alternative { w, eps } => StateSpec::Spiked { w: w.clone(), eps: *eps },
        }
    }

    pub fn is_null(&self) -> bool {
        self.hypothesis == Hypothesis::Null
    }
}

/// Dense `rho_W^eps = (1 + 3 eps (W + W^dagger)) / D`, rejected if not PSD.
pub fn spiked_state(w: &WeylString, eps: f64, limits: &Limits) -> Result<DenseOperator> {
    dense_spiked(w, eps, limits)
}

/// Outcome of the distinguishing rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub null: bool,
    pub max_amplitude: f64,
    pub argmax: Option<WeylString>,
}

/// Null iff `max_W u_W <= 3 eps / 2` over non-identity strings (inclusive up to rounding).
pub fn distinguish(table: &AmplitudeTable, eps: f64) -> Decision {
    match table.argmax() {
        Some((w, u)) => Decision { null: u <= 1.5 * eps + 1e-12, max_amplitude: u, argmax: Some(w) },
        None => Decision { null: true, max_amplitude: 0.0, argmax: None },
    }
}

/// The `4^n` qutrit strings with every exponent in `{1, 2}`, encoded two bits per site.
pub fn guess_code(w: &WeylString) -> Option<u64> {
    if w.dims().uniform_dim() != Some(3) {
        return None;
    }
    let mut code = 0u64;
    for site in 0..w.n_sites() {
        let (x, z) = (w.x()[site], w.z()[site]);
        if x == 0 || z == 0 {
            return None;
        }
        code = (code << 2) | (((x - 1) << 1) | (z - 1)) as u64;
    }
    Some(code)
}

pub fn guess_from_code(n: usize, code: u64) -> WeylString {
    let pairs: Vec<(usize, usize)> = (0..n)
        .map(|site| {
            let bits = (code >> (2 * (n - 1 - site))) & 3;
            (1 + (bits >> 1) as usize, 1 + (bits & 1) as usize)
        })
        .collect();
    WeylString::from_pairs(3, &pairs).unwrap()
}

/// A uniformly random member of the guess set.
pub fn random_guess(n: usize, rng: &mut seed::Rng) -> WeylString {
    let mask = if n >= 32 { u64::MAX } else { (1u64 << (2 * n)) - 1 };
    guess_from_code(n, rng.random::<u64>() & mask)
}

/// `N` uniform draws from the guess set; success iff one equals `W*` or `W*^dagger`.
pub fn single_copy_trial(n: usize, hidden: &WeylString, draws: usize, seed: u64) -> Result<bool> {
    if n == 0 || n > 32 || hidden.n_sites() != n {
        return Err(Error::InvalidArgument(format!("single-copy trial needs 1 <= n <= 32 matching the string, got {n}")));
    }
    let target = guess_code(hidden)
        .ok_or_else(|| Error::InvalidArgument("hidden string must come from the {1,2} guess set".into()))?;
    let conj = guess_code(&hidden.adjoint()).unwrap();
    let mask = if n == 32 { u64::MAX } else { (1u64 << (2 * n)) - 1 };
    let mut rng = seed::rng(seed);
    Ok((0..draws).any(|_| {
        let g = rng.random::<u64>() & mask;
        g == target || g == conj
    }))
}

/// Exhaustive variant: does any of `guesses` hit `W*` or its adjoint.
pub fn single_copy_cover(hidden: &WeylString, guesses: impl IntoIterator<Item = WeylString>) -> bool {
    let adj = hidden.adjoint();
    guesses.into_iter().any(|g| g.projectively_equal(hidden) || g.projectively_equal(&adj))
}

/// `1 - (1 - 2 * 4^-n)^N`.
pub fn theoretical_hit_probability(n: usize, draws: u64) -> f64 {
    let miss = 1.0 - 2.0 * 0.25f64.powi(n as i32);
    1.0 - miss.powf(draws as f64)
}

/// Smallest `N` with `theoretical_hit_probability(n, N) >= p`.
pub fn theoretical_single_copy_nmin(n: usize, p: f64) -> u64 {
    let miss = 1.0 - 2.0 * 0.25f64.powi(n as i32);
    if miss <= 0.0 {
        return 1;
    }
    ((1.0 - p).ln() / miss.ln()).ceil().max(0.0) as u64
}

/// `tr(W^{⊗c} rho^{⊗c}) = tr(W rho)^c` for a spiked state, exactly.
pub fn spiked_moment(w: &WeylString, eps: f64, v: &WeylString, copies: usize) -> Result<C64> {
    Ok(crate::bell::spiked_expectation(w, eps, v)?.powu(copies as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::enumerate_strings;

    #[test]
    fn spiked_expectations() {
        let limits = Limits::default();
        let w = WeylString::from_pairs(3, &[(1, 2), (0, 1)]).unwrap();
        let rho = spiked_state(&w, 0.3, &limits).unwrap();
        assert!(rho.is_density_matrix(1e-10));
        assert!((w.expectation(&rho).unwrap() - C64::new(0.9, 0.0)).norm() < 1e-12);
        assert!((w.adjoint().expectation(&rho).unwrap() - C64::new(0.9, 0.0)).norm() < 1e-12);
        for v in enumerate_strings(w.dims(), false, &limits).unwrap().skip(1) {
            let got = v.expectation(&rho).unwrap();
            let want = spiked_moment(&w, 0.3, &v, 1).unwrap();
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn qutrit_third_is_psd() {
        let w = WeylString::from_pairs(3, &[(0, 1)]).unwrap();
        let rho = spiked_state(&w, 1.0 / 3.0, &Limits::default()).unwrap();
        assert!(rho.min_eigenvalue() >= -1e-12);
    }

    #[test]
    fn hit_probability() {
        assert!((theoretical_hit_probability(1, 1) - 0.5).abs() < 1e-15);
        assert_eq!(theoretical_hit_probability(4, 0), 0.0);
        let n: Vec<u64> = (1..=6).map(|n| theoretical_single_copy_nmin(n, 0.7)).collect();
        assert_eq!(n, vec![2, 10, 38, 154, 616, 2466]);
    }

    #[test]
    fn guess_codes_roundtrip() {
        for code in 0..16 {
            assert_eq!(guess_code(&guess_from_code(2, code)), Some(code));
        }
        let w = guess_from_code(1, 0);
        assert!(!single_copy_trial(1, &w, 0, 1).unwrap());
        assert!(single_copy_cover(&w, (0..4).map(|c| guess_from_code(1, c))));
    }

    #[test]
    fn tie_goes_to_null() {
        let dims = DimVector::uniform(3, 1).unwrap();
        let mut values = vec![0.0; 9];
        values[0] = 1.0;
        values[4] = 0.45;
        let table = AmplitudeTable::from_values(dims, values).unwrap();
        assert!(distinguish(&table, 0.3).null);
    }
}
