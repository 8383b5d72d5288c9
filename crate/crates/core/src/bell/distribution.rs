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

use std::collections::HashMap;

use nalgebra::DMatrix;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng as _;

use crate::dense::{DenseOperator, Limits, C64, ONE, ZERO};
use crate::error::{Error, Result};
use crate::seed;
use crate::weyl::arith::mod_inverse;
use crate::weyl::{boost, enumerate_strings, shift, DimVector, Phase, WeylString};

use super::states::{cluster_trace, digits};
use super::transform::character_transform;
use super::{ClusterLayout, CoarseOutcome};

const CLAMP_TOL: f64 = 1e-12;
const SUM_TOL: f64 = 1e-9;
const STATE_TOL: f64 = 1e-10;

/// The state whose copies are fed to the coarse Bell measurement.
#[derive(Debug, Clone)]
pub enum StateSpec {
    /// `rho` on every copy.
    Dense(DenseOperator),
    /// One state per copy, e.g. `sigma^{⊗(c-1)} ⊗ rho`.
    Copies(Vec<DenseOperator>),
    /// `rho_1 ⊗ ... ⊗ rho_n`, one single-site state per site.
    Product(Vec<DenseOperator>),
    /// `rho_W^eps = (1 + 3 eps (W + W^dagger)) / D`.
    Spiked { w: WeylString, eps: f64 },
}

/// Evaluation strategy for [`outcome_distribution_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    Auto,
    /// Bell-vector contraction against the explicit density matrices.
    Dense,
    /// Weyl characteristic function followed by an inverse character transform.
    Characteristic,
    Product,
    Spiked,
}

/// Which representation a distribution ended up with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Dense,
    Characteristic,
    Product,
    Spiked,
}

#[derive(Debug, Clone)]
enum Repr {
    Table(Vec<f64>),
    Product(Vec<Vec<f64>>),
    Spiked(Box<SpikedExpansion>),
}

/// Exact probabilities of the coarse outcomes of `c` copies.
#[derive(Debug, Clone)]
pub struct OutcomeDistribution {
    layout: ClusterLayout,
    kind: Representation,
    repr: Repr,
}

/// `tr(V rho_W^eps)` for any string `V`, exactly.
pub fn spiked_expectation(w: &WeylString, eps: f64, v: &WeylString) -> Result<C64> {
    let mut acc = ZERO;
    if v.is_identity() {
        acc += v.scalar();
    }
    for term in [w.clone(), w.adjoint()] {
        let prod = v.multiply(&term)?;
        if prod.is_identity() {
            acc += prod.scalar() * (3.0 * eps);
        }
    }
    Ok(acc)
}

/// Largest `eps` for which `rho_W^eps` is guaranteed PSD without a dense check.
pub fn spiked_eps_limit(w: &WeylString) -> f64 {
    let cube_root = w.phase().as_root_of(3).is_some();
    if w.dims().uniform_dim() == Some(3) && cube_root {
        1.0 / 3.0
    } else {
        1.0 / 6.0
    }
}

pub fn outcome_distribution(spec: &StateSpec, dims: &DimVector, limits: &Limits) -> Result<OutcomeDistribution> {
    outcome_distribution_with(spec, dims, Path::Auto, limits)
}

pub fn outcome_distribution_with(
    spec: &StateSpec,
    dims: &DimVector,
    path: Path,
    limits: &Limits,
) -> Result<OutcomeDistribution> {
    let layout = ClusterLayout::new(dims)?;
    let path = match (path, spec) {
        (Path::Auto, StateSpec::Spiked { w, .. }) => {
            if spiked_fast_path_applies(&layout, w) {
                Path::Spiked
            } else {
                Path::Characteristic
            }
        }
        (Path::Auto, StateSpec::Product(_)) => Path::Product,
        (Path::Auto, _) => Path::Characteristic,
        (p, _) => p,
    };
    match path {
        Path::Spiked => {
            let StateSpec::Spiked { w, eps } = spec else {
                return Err(Error::UnsupportedState("spiked path needs a spiked state".into()));
            };
            if !spiked_fast_path_applies(&layout, w) {
                return Err(Error::UnsupportedState("spiked path needs a uniform odd prime dimension".into()));
            }
            let expansion = SpikedExpansion::new(&layout, w, *eps)?;
            Ok(OutcomeDistribution { layout, kind: Representation::Spiked, repr: Repr::Spiked(Box::new(expansion)) })
        }
        Path::Product => {
            let StateSpec::Product(sites) = spec else {
                return Err(Error::UnsupportedState("product path needs a product state".into()));
            };
            let tables = product_tables(&layout, sites)?;
            Ok(OutcomeDistribution { layout, kind: Representation::Product, repr: Repr::Product(tables) })
        }
        Path::Dense | Path::Characteristic => {
            let copies = copy_states(spec, &layout, limits)?;
            let raw = if path == Path::Dense {
                dense_table(&layout, &copies, limits)?
            } else {
                characteristic_table(&layout, &copies, limits)?
            };
            let kind = if path == Path::Dense { Representation::Dense } else { Representation::Characteristic };
            Ok(OutcomeDistribution { layout, kind, repr: Repr::Table(normalize(raw)?) })
        }
        Path::Auto => unreachable!(),
    }
}

fn spiked_fast_path_applies(layout: &ClusterLayout, w: &WeylString) -> bool {
    matches!(layout.dims().uniform_dim(), Some(d) if d > 2) && w.dims() == layout.dims()
}

fn check_state(rho: &DenseOperator, dim: usize) -> Result<()> {
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch(format!("state of dimension {} where {dim} is needed", rho.dim())));
    }
    if !rho.is_hermitian(STATE_TOL) || !rho.has_unit_trace(STATE_TOL) {
        return Err(Error::UnsupportedState("input is not a unit-trace Hermitian matrix".into()));
    }
    let min = rho.min_eigenvalue();
    if min < -STATE_TOL {
        return Err(Error::NotPsd(min));
    }
    Ok(())
}

/// Materializes the per-copy density matrices of a spec.
fn copy_states(spec: &StateSpec, layout: &ClusterLayout, limits: &Limits) -> Result<Vec<DenseOperator>> {
    let dims = layout.dims();
    let dim = dims.total_dim().ok_or(Error::DenseCapExceeded { dim: usize::MAX, cap: limits.dense_dim })?;
    limits.check_dense(dim)?;
    let c = layout.copies();
    let states = match spec {
        StateSpec::Dense(rho) => vec![rho.clone(); c],
        StateSpec::Copies(list) => {
            if list.len() != c {
                return Err(Error::DimensionMismatch(format!("{} copy states for {c} copies", list.len())));
            }
            list.clone()
        }
        StateSpec::Product(sites) => {
            if sites.len() != dims.len() {
                return Err(Error::DimensionMismatch(format!("{} site states for {} sites", sites.len(), dims.len())));
            }
            vec![DenseOperator::kron_all(sites.iter()); c]
        }
        StateSpec::Spiked { w, eps } => vec![dense_spiked(w, *eps, limits)?; c],
    };
    for rho in &states {
        check_state(rho, dim)?;
    }
    Ok(states)
}

/// Dense `rho_W^eps`, PSD-checked.
pub(crate) fn dense_spiked(w: &WeylString, eps: f64, limits: &Limits) -> Result<DenseOperator> {
    if w.is_identity() {
        return Err(Error::InvalidArgument("spiked states need a non-identity string".into()));
    }
    let m = w.to_matrix(limits)?;
    let dim = m.dim();
    let pert = m.add(&m.adjoint()).scale(C64::new(3.0 * eps, 0.0));
    let rho = DenseOperator::identity(dim).add(&pert).scale(C64::new(1.0 / dim as f64, 0.0));
    let min = rho.min_eigenvalue();
    if min < -STATE_TOL {
        return Err(Error::NotPsd(min));
    }
    Ok(rho)
}

fn normalize(mut probs: Vec<f64>) -> Result<Vec<f64>> {
    for p in probs.iter_mut() {
        if *p < -CLAMP_TOL {
            return Err(Error::NotPsd(*p));
        }
        if *p < 0.0 {
            *p = 0.0;
        }
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() >= SUM_TOL {
        return Err(Error::NotNormalized(sum));
    }
    probs.iter_mut().for_each(|p| *p /= sum);
    Ok(probs)
}

fn table_len(layout: &ClusterLayout, limits: &Limits) -> Result<usize> {
    let total = layout.num_outcomes();
    if total > limits.enumeration {
        return Err(Error::EnumerationCapExceeded { count: total, cap: limits.enumeration });
    }
    Ok(total as usize)
}

/// Row-major strides of the computational basis over `dims`.
fn basis_strides(dims: &DimVector) -> Vec<usize> {
    let n = dims.len();
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims.get(i + 1);
    }
    strides
}

/// Literal evaluation: `sum_{|I| = s} <Phi_{I,q}| rho_1 ⊗ ... ⊗ rho_c |Phi_{I,q}>` per cluster.
fn dense_table(layout: &ClusterLayout, copies: &[DenseOperator], limits: &Limits) -> Result<Vec<f64>> {
    let dims = layout.dims();
    let dim = copies[0].dim();
    let full = (dim as u128).checked_pow(copies.len() as u32).unwrap_or(u128::MAX);
    if full > limits.dense_dim as u128 {
        return Err(Error::DenseCapExceeded { dim: full.min(usize::MAX as u128) as usize, cap: limits.dense_dim });
    }
    let total = table_len(layout, limits)?;
    let clusters = layout.clusters();
    let strides = basis_strides(dims);
    let shifts: usize = clusters.iter().map(|c| c.p).product();
    let i_count: usize = clusters.iter().map(|c| c.p.pow(c.p as u32 - 1)).product();
    let q_count: usize = shifts;
    let l = dims.phase_modulus();

    let mut out = vec![0.0; total];
    let mut gram = vec![ZERO; shifts * shifts];
    let mut rows = vec![vec![0usize; copies.len()]; shifts];
    for i_idx in 0..i_count {
        // per-cluster I vectors, cluster 0 most significant
        let mut rem = i_idx;
        let mut i_vecs = vec![Vec::new(); clusters.len()];
        for (k, c) in clusters.iter().enumerate().rev() {
            let m = c.p.pow(c.p as u32 - 1);
            i_vecs[k] = digits(rem % m, c.p, c.p - 1);
            rem /= m;
        }
        // basis index of every copy for every joint shift K
        for (kk, row) in rows.iter_mut().enumerate() {
            row.iter_mut().for_each(|r| *r = 0);
            let mut rem = kk;
            for (k, c) in clusters.iter().enumerate().rev() {
                let shift = rem % c.p;
                rem /= c.p;
                for (r, copy) in c.copies().enumerate() {
                    let v = if r == 0 { 0 } else { i_vecs[k][r - 1] };
                    row[copy] += ((v + shift) % c.p) * strides[c.site];
                }
            }
        }
        for a in 0..shifts {
            for b in 0..shifts {
                let mut acc = ONE;
                for (j, rho) in copies.iter().enumerate() {
                    acc *= rho.get(rows[a][j], rows[b][j]);
                }
                gram[a * shifts + b] = acc;
            }
        }
        let s_slots: Vec<usize> = i_vecs
            .iter()
            .zip(clusters)
            .map(|(v, c)| v.iter().sum::<usize>() % c.p)
            .collect();
        for q_idx in 0..q_count {
            let mut qs = vec![0; clusters.len()];
            let mut rem = q_idx;
            for (k, c) in clusters.iter().enumerate().rev() {
                qs[k] = rem % c.p;
                rem /= c.p;
            }
            let mut acc = ZERO;
            for a in 0..shifts {
                for b in 0..shifts {
                    // phase omega^{sum_k (b_k - a_k) q_k}
                    let (mut ra, mut rb, mut num) = (a, b, 0i64);
                    for (k, c) in clusters.iter().enumerate().rev() {
                        let (ka, kb) = (ra % c.p, rb % c.p);
                        ra /= c.p;
                        rb /= c.p;
                        num += ((kb + c.p - ka) * qs[k] % c.p * (l / c.p)) as i64;
                    }
                    acc += Phase::new(num, l).to_complex() * gram[a * shifts + b];
                }
            }
            let idx: u64 = clusters
                .iter()
                .enumerate()
                .map(|(k, c)| (s_slots[k] * c.p + qs[k]) as u64 * layout.stride(k))
                .sum();
            out[idx as usize] += acc.re / shifts as f64;
        }
    }
    Ok(out)
}

/// `p(o) = prod_k p_k^-2 sum_assign omega^{-(z s - x q)} prod_j tr(V_j rho_j)`.
fn characteristic_table(layout: &ClusterLayout, copies: &[DenseOperator], limits: &Limits) -> Result<Vec<f64>> {
    let dims = layout.dims();
    let total = table_len(layout, limits)?;
    // tr(V rho_j) for every string V, lexicographic
    let mut tables: Vec<Vec<C64>> = Vec::with_capacity(copies.len());
    for (j, rho) in copies.iter().enumerate() {
        if j > 0 && copies[j - 1].matrix() == rho.matrix() {
            tables.push(tables[j - 1].clone());
            continue;
        }
        let table = enumerate_strings(dims, false, limits)?
            .map(|v| v.expectation(rho))
            .collect::<Result<Vec<_>>>()?;
        tables.push(table);
    }
    let clusters = layout.clusters();
    // cluster holding copy j of site i
    let mut owner = vec![vec![0usize; dims.len()]; layout.copies()];
    for (k, c) in clusters.iter().enumerate() {
        for j in c.copies() {
            owner[j][c.site] = k;
        }
    }
    let lex_strides: Vec<usize> = {
        let n = dims.len();
        let mut s = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            s[i] = s[i + 1] * dims.get(i + 1) * dims.get(i + 1);
        }
        s
    };
    let mut values = vec![ZERO; total];
    let mut slots = vec![0usize; clusters.len()];
    for (a, value) in values.iter_mut().enumerate() {
        for (k, slot) in slots.iter_mut().enumerate() {
            *slot = layout.slot(a as u64, k);
        }
        let mut acc = ONE;
        for (j, table) in tables.iter().enumerate() {
            let mut lex = 0;
            for (site, &k) in owner[j].iter().enumerate() {
                let p = clusters[k].p;
                let (z, x) = (slots[k] / p, slots[k] % p);
                lex += (x * p + z) * lex_strides[site];
            }
            acc *= table[lex];
            if acc == ZERO {
                break;
            }
        }
        *value = acc;
    }
    character_transform(&mut values, layout, true);
    Ok(values.into_iter().map(|v| v.re).collect())
}

fn product_tables(layout: &ClusterLayout, sites: &[DenseOperator]) -> Result<Vec<Vec<f64>>> {
    let dims = layout.dims();
    if sites.len() != dims.len() {
        return Err(Error::DimensionMismatch(format!("{} site states for {} sites", sites.len(), dims.len())));
    }
    for (i, rho) in sites.iter().enumerate() {
        check_state(rho, dims.get(i))?;
    }
    layout
        .clusters()
        .iter()
        .map(|c| {
            let m = sites[c.site].matrix();
            let refs = vec![m; c.p];
            normalize(cluster_trace(c.p, &refs).into_iter().map(|v| v.re).collect())
        })
        .collect()
}

/// `rho_W^eps` on `d` copies expanded into `3^d` Weyl assignments.
#[derive(Debug, Clone)]
struct SpikedExpansion {
    d: usize,
    n: usize,
    /// `(coefficient, per-cluster vector ids)` for every surviving assignment.
    terms: Vec<(C64, Vec<usize>)>,
    vectors: Vec<Vec<C64>>,
    x: Vec<usize>,
    z: Vec<usize>,
    t_dist: WeightedIndex<f64>,
    pivot: usize,
}

impl SpikedExpansion {
    fn new(layout: &ClusterLayout, w: &WeylString, eps: f64) -> Result<Self> {
        if w.is_identity() {
            return Err(Error::InvalidArgument("spiked states need a non-identity string".into()));
        }
        if !(0.0..=spiked_eps_limit(w) + 1e-12).contains(&eps) {
            return Err(Error::NotPsd(-eps));
        }
        let d = layout.dims().uniform_dim().expect("uniform dims");
        let n = layout.dims().len();
        let ops = [WeylString::identity(layout.dims().clone()), w.clone(), w.adjoint()];
        let site_mats: Vec<DMatrix<C64>> = (0..d * d)
            .map(|xz| (shift(d).pow(xz / d) * boost(d).pow(xz % d)).into_matrix())
            .collect();
        let mut cache: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut vectors: Vec<Vec<C64>> = Vec::new();
        let mut terms = Vec::new();
        let norm = (d as f64).powi((n * d) as i32);
        'assign: for tau in 0..3usize.pow(d as u32) {
            let choice = digits(tau, 3, d);
            let non_identity = choice.iter().filter(|&&c| c != 0).count();
            let mut coeff = C64::new((3.0 * eps).powi(non_identity as i32) / norm, 0.0);
            for &c in &choice {
                coeff *= ops[c].scalar();
            }
            let mut ids = Vec::with_capacity(n);
            for site in 0..n {
                let key: Vec<usize> = choice.iter().map(|&c| ops[c].x()[site] * d + ops[c].z()[site]).collect();
                let id = match cache.get(&key) {
                    Some(&id) => id,
                    None => {
                        let refs: Vec<&DMatrix<C64>> = key.iter().map(|&xz| &site_mats[xz]).collect();
                        vectors.push(cluster_trace(d, &refs));
                        cache.insert(key, vectors.len() - 1);
                        vectors.len() - 1
                    }
                };
                if vectors[id].iter().all(|v| v.norm() < 1e-14) {
                    continue 'assign;
                }
                ids.push(id);
            }
            terms.push((coeff, ids));
        }

        // closed-form marginal of t = <z, s> - <x, q>
        let v_w = w.normalized();
        let v_wd = w.adjoint().normalized();
        let a = spiked_expectation(w, eps, &v_w)?.powu(d as u32);
        let b = spiked_expectation(w, eps, &v_wd)?.powu(d as u32);
        let t_probs: Vec<f64> = (0..d)
            .map(|t| {
                let wt = Phase::root(t as i64, d, d).to_complex();
                ((ONE + a * wt.conj() + b * wt).re / d as f64).max(0.0)
            })
            .collect();
        let t_dist = WeightedIndex::new(&t_probs).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let pivot = (0..n).find(|&i| w.x()[i] != 0 || w.z()[i] != 0).unwrap();
        Ok(SpikedExpansion { d, n, terms, vectors, x: w.x().to_vec(), z: w.z().to_vec(), t_dist, pivot })
    }

    fn probability(&self, layout: &ClusterLayout, index: u64) -> f64 {
        let slots: Vec<usize> = (0..self.n).map(|k| layout.slot(index, k)).collect();
        let mut acc = ZERO;
        for (coeff, ids) in &self.terms {
            let mut term = *coeff;
            for (k, &id) in ids.iter().enumerate() {
                term *= self.vectors[id][slots[k]];
            }
            acc += term;
        }
        acc.re.max(0.0)
    }

    fn sample(&self, layout: &ClusterLayout, rng: &mut seed::Rng) -> u64 {
        let d = self.d;
        let t = self.t_dist.sample(rng);
        let mut s = vec![0usize; self.n];
        let mut q = vec![0usize; self.n];
        let mut rest = 0usize;
        for k in (0..self.n).filter(|&k| k != self.pivot) {
            s[k] = rng.random_range(0..d);
            q[k] = rng.random_range(0..d);
            rest = (rest + self.z[k] * s[k] + (d - self.x[k]) * q[k]) % d;
        }
        let k = self.pivot;
        let need = (t + d - rest) % d;
        if self.z[k] != 0 {
            q[k] = rng.random_range(0..d);
            let lhs = (need + self.x[k] * q[k]) % d;
            s[k] = lhs * mod_inverse(self.z[k], d).unwrap() % d;
        } else {
            s[k] = rng.random_range(0..d);
            // need = -x q
            q[k] = (d - need) % d * mod_inverse(self.x[k], d).unwrap() % d;
        }
        (0..self.n).map(|k| ((s[k] * d + q[k]) as u64) * layout.stride(k)).sum()
    }
}

impl OutcomeDistribution {
    pub fn layout(&self) -> &ClusterLayout {
        &self.layout
    }

    pub fn representation(&self) -> Representation {
        self.kind
    }

    pub fn num_outcomes(&self) -> u128 {
        self.layout.num_outcomes()
    }

    pub fn probability(&self, index: u64) -> f64 {
        match &self.repr {
            Repr::Table(t) => t[index as usize],
            Repr::Product(tables) => tables
                .iter()
                .enumerate()
                .map(|(k, t)| t[self.layout.slot(index, k)])
                .product(),
            Repr::Spiked(e) => e.probability(&self.layout, index),
        }
    }

    pub fn probability_of(&self, outcome: &CoarseOutcome) -> Result<f64> {
        Ok(self.probability(self.layout.encode(outcome)?))
    }

    /// Full probability vector indexed by packed outcome.
    pub fn to_table(&self, limits: &Limits) -> Result<Vec<f64>> {
        if let Repr::Table(t) = &self.repr {
            return Ok(t.clone());
        }
        let total = table_len(&self.layout, limits)?;
        Ok((0..total as u64).map(|i| self.probability(i)).collect())
    }

    pub fn total_variation(&self, other: &OutcomeDistribution, limits: &Limits) -> Result<f64> {
        if self.layout != other.layout {
            return Err(Error::DimensionMismatch("distributions over different layouts".into()));
        }
        let (a, b) = (self.to_table(limits)?, other.to_table(limits)?);
        Ok(0.5 * a.iter().zip(&b).map(|(x, y)| (x - y).abs()).sum::<f64>())
    }

    /// `N` i.i.d. packed outcomes.
    pub fn sample_indices(&self, count: usize, seed: u64) -> Vec<u64> {
        let mut rng = seed::rng(seed);
        match &self.repr {
            Repr::Table(t) => {
                let dist = WeightedIndex::new(t).expect("normalized table");
                (0..count).map(|_| dist.sample(&mut rng) as u64).collect()
            }
            Repr::Product(tables) => {
                let dists: Vec<_> = tables.iter().map(|t| WeightedIndex::new(t).expect("normalized table")).collect();
                (0..count)
                    .map(|_| {
                        dists
                            .iter()
                            .enumerate()
                            .map(|(k, dist)| dist.sample(&mut rng) as u64 * self.layout.stride(k))
                            .sum()
                    })
                    .collect()
            }
            Repr::Spiked(e) => (0..count).map(|_| e.sample(&self.layout, &mut rng)).collect(),
        }
    }

    /// Exact `E[estimator]` for `w`, i.e. `tr(W rho)^c` in the unhybridized case.
    pub fn exact_moment(&self, w: &WeylString, limits: &Limits) -> Result<C64> {
        self.layout.check(w)?;
        match &self.repr {
            Repr::Product(tables) => {
                let mut acc = w.phase().pow(self.layout.copies() as u64).to_complex();
                for (t, c) in tables.iter().zip(self.layout.clusters()) {
                    let mut part = ZERO;
                    for (slot, p) in t.iter().enumerate() {
                        let e = w.site_character_exponent(c.site, slot / c.p, slot % c.p);
                        part += Phase::root(e as i64, c.p, c.p).to_complex() * p;
                    }
                    acc *= part;
                }
                Ok(acc)
            }
            _ => {
                let table = self.to_table(limits)?;
                Ok(table
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| **p != 0.0)
                    .map(|(i, p)| self.layout.character_unchecked(w, i as u64).to_complex() * p)
                    .sum())
            }
        }
    }
}

/// Seeded i.i.d. coarse outcomes.
pub fn sample_outcomes(dist: &OutcomeDistribution, count: usize, seed: u64) -> Vec<CoarseOutcome> {
    dist.sample_indices(count, seed).into_iter().map(|i| dist.layout.decode(i)).collect()
}
