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

use crate::dense::{Limits, C64, ZERO};
use crate::error::{Error, Result};
use crate::weyl::{enumerate_strings, WeylString};

use super::transform::character_transform;
use super::{ClusterLayout, CoarseOutcome};

/// Sample mean of the estimator `omega^{<b,s> - <a,q>}` for `W = X^a Z^b`.
pub fn reconstruct_moment(layout: &ClusterLayout, samples: &[CoarseOutcome], w: &WeylString) -> Result<C64> {
    let indices = samples.iter().map(|o| layout.encode(o)).collect::<Result<Vec<_>>>()?;
    reconstruct_moment_indices(layout, &indices, w)
}

/// [`reconstruct_moment`] on packed outcomes.
pub fn reconstruct_moment_indices(layout: &ClusterLayout, samples: &[u64], w: &WeylString) -> Result<C64> {
    layout.check(w)?;
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples".into()));
    }
    let sum: C64 = samples.iter().map(|&i| layout.character_unchecked(w, i).to_complex()).sum();
    Ok(sum / samples.len() as f64)
}

/// Normalized histogram of packed outcomes.
pub fn histogram(layout: &ClusterLayout, samples: &[u64], limits: &Limits) -> Result<Vec<f64>> {
    let total = layout.num_outcomes();
    if total > limits.enumeration {
        return Err(Error::EnumerationCapExceeded { count: total, cap: limits.enumeration });
    }
    let mut h = vec![0.0; total as usize];
    let unit = 1.0 / samples.len().max(1) as f64;
    for &i in samples {
        h[i as usize] += unit;
    }
    Ok(h)
}

/// Estimator means for every phase-one string in lexicographic order,
/// given outcome weights (a histogram or an exact distribution).
pub fn all_moments(layout: &ClusterLayout, weights: &[f64], limits: &Limits) -> Result<Vec<C64>> {
    if weights.len() as u128 != layout.num_outcomes() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} outcomes",
            weights.len(),
            layout.num_outcomes()
        )));
    }
    let mut values: Vec<C64> = weights.iter().map(|&w| C64::new(w, 0.0)).collect();
    character_transform(&mut values, layout, false);
    if layout.copies() == layout.dims().get(0) && layout.dims().uniform_dim().is_some() {
        // one cluster per site: the transform index is a digit permutation of the lex index
        let mut out = vec![ZERO; values.len()];
        for w in enumerate_strings(layout.dims(), false, limits)? {
            out[w.lex_index() as usize] = values[layout.transform_index(&w) as usize];
        }
        return Ok(out);
    }
    enumerate_strings(layout.dims(), false, limits)?
        .map(|w| Ok(values[layout.transform_index(&w) as usize]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::{outcome_distribution, StateSpec};
    use crate::dense::DenseOperator;
    use crate::weyl::DimVector;

    #[test]
    fn identity_moment_is_one() {
        let layout = ClusterLayout::prime(3, 1).unwrap();
        let samples = vec![0u64, 4, 8, 3];
        let id = WeylString::identity(DimVector::uniform(3, 1).unwrap());
        assert_eq!(reconstruct_moment_indices(&layout, &samples, &id).unwrap(), C64::new(1.0, 0.0));
    }

    #[test]
    fn all_moments_match_direct() {
        let dims = DimVector::uniform(3, 2).unwrap();
        let limits = Limits::default();
        let rho = DenseOperator::from_fn(9, |r, c| {
            if r == c {
                C64::new(1.0 / 9.0, 0.0)
            } else {
                C64::new(0.01 * ((r + c) % 3) as f64, 0.005 * (r as f64 - c as f64))
            }
        });
        let dist = outcome_distribution(&StateSpec::Dense(rho.clone()), &dims, &limits).unwrap();
        let table = dist.to_table(&limits).unwrap();
        let all = all_moments(dist.layout(), &table, &limits).unwrap();
        for w in enumerate_strings(&dims, false, &limits).unwrap() {
            let expect = w.expectation(&rho).unwrap().powu(3);
            assert!((all[w.lex_index() as usize] - expect).norm() < 1e-10);
        }
    }
}
