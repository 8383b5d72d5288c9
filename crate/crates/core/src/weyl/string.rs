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

use std::fmt;

use crate::dense::{DenseOperator, Limits, C64, ZERO};
use crate::error::{Error, Result};

use super::arith::{mod_inverse, modulo};
use super::{DimVector, Phase};

/// A generalized Pauli string `phase * (X^x0 Z^z0) ⊗ (X^x1 Z^z1) ⊗ ...`.
///
/// Every site is kept in normal form with the shift to the left of the boost.
/// Exponents are reduced modulo the site dimension and the scalar is an exact
/// root of unity over [`DimVector::phase_modulus`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylString {
    dims: DimVector,
    x: Vec<usize>,
    z: Vec<usize>,
    phase: Phase,
}

impl WeylString {
    pub fn new(dims: DimVector, x: Vec<usize>, z: Vec<usize>) -> Result<Self> {
        if x.len() != dims.len() || z.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vectors of length {}/{} for {} sites",
                x.len(),
                z.len(),
                dims.len()
            )));
        }
        let x = x.iter().zip(dims.iter()).map(|(&e, d)| e % d).collect();
        let z = z.iter().zip(dims.iter()).map(|(&e, d)| e % d).collect();
        let phase = Phase::one(dims.phase_modulus());
        Ok(WeylString { dims, x, z, phase })
    }

    /// Builds a string on `n = pairs.len()` sites of dimension `d` from `(x, z)` pairs.
    pub fn from_pairs(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let dims = DimVector::uniform(d, pairs.len())?;
        let (x, z) = pairs.iter().copied().unzip();
        WeylString::new(dims, x, z)
    }

    pub fn identity(dims: DimVector) -> Self {
        let n = dims.len();
        WeylString::new(dims, vec![0; n], vec![0; n]).unwrap()
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        assert_eq!(phase.modulus(), self.dims.phase_modulus(), "phase modulus mismatch");
        self.phase = phase;
        self
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn n_sites(&self) -> usize {
        self.dims.len()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// True when every exponent vanishes (the scalar is ignored).
    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(self.z.iter()).all(|&e| e == 0)
    }

    /// Same exponents, scalar ignored.
    pub fn projectively_equal(&self, other: &WeylString) -> bool {
        self.dims == other.dims && self.x == other.x && self.z == other.z
    }

    /// Copy of this string with the scalar dropped.
    pub fn normalized(&self) -> WeylString {
        WeylString { phase: Phase::one(self.phase.modulus()), ..self.clone() }
    }

    fn check_same_dims(&self, other: &WeylString) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dims, other.dims)));
        }
        Ok(())
    }

    /// Normal-form product `self * other`.
    ///
    /// Per site `(X^a Z^b)(X^c Z^e) = omega^{b c} X^{a+c} Z^{b+e}`, which follows
    /// from `Z X = omega X Z`.
    pub fn multiply(&self, other: &WeylString) -> Result<WeylString> {
        self.check_same_dims(other)?;
        let l = self.dims.phase_modulus();
        let mut num = self.phase.numerator() as i64 + other.phase.numerator() as i64;
        let mut x = Vec::with_capacity(self.x.len());
        let mut z = Vec::with_capacity(self.z.len());
        for (site, d) in self.dims.iter().enumerate() {
            let step = (l / d) as i64;
            num += step * ((self.z[site] * other.x[site]) % d) as i64;
            x.push((self.x[site] + other.x[site]) % d);
            z.push((self.z[site] + other.z[site]) % d);
        }
        Ok(WeylString { dims: self.dims.clone(), x, z, phase: Phase::new(num, l) })
    }

    /// Conjugate transpose, `(c X^a Z^b)^† = conj(c) omega^{a b} X^{-a} Z^{-b}` per site.
    pub fn adjoint(&self) -> WeylString {
        let l = self.dims.phase_modulus();
        let mut num = -(self.phase.numerator() as i64);
        let mut x = Vec::with_capacity(self.x.len());
        let mut z = Vec::with_capacity(self.z.len());
        for (site, d) in self.dims.iter().enumerate() {
            num += ((l / d) * ((self.x[site] * self.z[site]) % d)) as i64;
            x.push((d - self.x[site]) % d);
            z.push((d - self.z[site]) % d);
        }
        WeylString { dims: self.dims.clone(), x, z, phase: Phase::new(num, l) }
    }

    pub fn pow(&self, k: usize) -> WeylString {
        let mut acc = WeylString::identity(self.dims.clone());
        for _ in 0..k {
            acc = acc.multiply(self).unwrap();
        }
        acc
    }

    /// Group commutator `A B A^-1 B^-1`, which is always a scalar.
    pub fn commutator(&self, other: &WeylString) -> Result<Phase> {
        let prod = self
            .multiply(other)?
            .multiply(&self.adjoint())?
            .multiply(&other.adjoint())?;
        debug_assert!(prod.is_identity());
        Ok(prod.phase)
    }

    /// The representative used when summing over cyclic subgroups.
    ///
    /// A site `X^k Z^z` with `k != 0` over an odd prime becomes the power
    /// `(X Z^a)^k` with `a = z / k`, i.e. it picks up `omega^{a k (k-1)/2}`.
    /// Boost-only sites are left alone, and qubit sites use the Hermitian
    /// Paulis (`Y = i X Z`).
    pub fn cyclic_representative(&self) -> WeylString {
        let l = self.dims.phase_modulus();
        let mut num = 0i64;
        for (site, d) in self.dims.iter().enumerate() {
            let (k, z) = (self.x[site], self.z[site]);
            if d == 2 {
                if k == 1 && z == 1 {
                    num += (l / 4) as i64;
                }
            } else if k != 0 {
                let inv = mod_inverse(k, d).expect("cyclic representative needs a prime site");
                let a = (z * inv) % d;
                let e = (a * (k * (k - 1) / 2)) % d;
                num += ((l / d) * e) as i64;
            }
        }
        self.normalized().with_phase(Phase::new(num, l))
    }

    fn strides(&self) -> Vec<usize> {
        let n = self.dims.len();
        let mut strides = vec![1usize; n];
        for site in (0..n.saturating_sub(1)).rev() {
            strides[site] = strides[site + 1] * self.dims.get(site + 1);
        }
        strides
    }

    /// Monomial action on a computational basis index: `W|k> = c |k'>`.
    pub fn act_on_basis(&self, index: usize) -> (usize, Phase) {
        let l = self.dims.phase_modulus();
        let mut num = self.phase.numerator() as i64;
        let mut out = 0usize;
        let mut rem = index;
        let strides = self.strides();
        for (site, d) in self.dims.iter().enumerate() {
            let k = rem / strides[site];
            rem %= strides[site];
            num += ((l / d) * ((self.z[site] * k) % d)) as i64;
            out += ((k + self.x[site]) % d) * strides[site];
        }
        (out, Phase::new(num, l))
    }

    /// Dense matrix of the string.
    pub fn to_matrix(&self, limits: &Limits) -> Result<DenseOperator> {
        let dim = self.dims.total_dim().ok_or(Error::DenseCapExceeded {
            dim: usize::MAX,
            cap: limits.dense_dim,
        })?;
        limits.check_dense(dim)?;
        let mut m = nalgebra::DMatrix::from_element(dim, dim, ZERO);
        for col in 0..dim {
            let (row, ph) = self.act_on_basis(col);
            m[(row, col)] = ph.to_complex();
        }
        Ok(DenseOperator::from_matrix(m))
    }

    /// `tr(W rho)` using the monomial structure, O(dim).
    pub fn expectation(&self, rho: &DenseOperator) -> Result<C64> {
        let dim = self.dims.total_dim().unwrap_or(0);
        if rho.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "state of dimension {} for string of dimension {dim}",
                rho.dim()
            )));
        }
        let mut acc = ZERO;
        for col in 0..dim {
            let (row, ph) = self.act_on_basis(col);
            acc += ph.to_complex() * rho.get(col, row);
        }
        Ok(acc)
    }

    /// Position in the lexicographic order over `(site, x, z)`, scalar ignored.
    pub fn lex_index(&self) -> u128 {
        let mut idx = 0u128;
        for (site, d) in self.dims.iter().enumerate() {
            idx = idx * (d * d) as u128 + (self.x[site] * d + self.z[site]) as u128;
        }
        idx
    }

    pub fn from_lex_index(dims: &DimVector, mut idx: u128) -> WeylString {
        let n = dims.len();
        let mut x = vec![0; n];
        let mut z = vec![0; n];
        for site in (0..n).rev() {
            let d = dims.get(site);
            let local = (idx % (d * d) as u128) as usize;
            idx /= (d * d) as u128;
            x[site] = local / d;
            z[site] = local % d;
        }
        WeylString::new(dims.clone(), x, z).unwrap()
    }

    /// Complex value of the scalar.
    pub fn scalar(&self) -> C64 {
        self.phase.to_complex()
    }

    /// `omega_d^{z s - x q}` style exponent helper used by coarse outcomes.
    pub(crate) fn site_character_exponent(&self, site: usize, s: usize, q: usize) -> usize {
        let d = self.dims.get(site);
        modulo((self.z[site] * s) as i64 - (self.x[site] * q) as i64, d)
    }
}

impl fmt::Display for WeylString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.phase.is_one() {
            write!(f, "w({}/{}) ", self.phase.numerator(), self.phase.modulus())?;
        }
        for site in 0..self.x.len() {
            if site > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "X{}Z{}", self.x[site], self.z[site])?;
        }
        Ok(())
    }
}

/// Dense matrix of a Weyl string under the default limits.
pub fn weyl_matrix(w: &WeylString) -> Result<DenseOperator> {
    w.to_matrix(&Limits::default())
}

/// Normal-form product of two strings over the same dimensions.
pub fn multiply(w1: &WeylString, w2: &WeylString) -> Result<WeylString> {
    w1.multiply(w2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::StateVector;

    fn omega(d: usize, k: usize) -> C64 {
        Phase::root(k as i64, d, d).to_complex()
    }

    #[test]
    fn boost_matrix_qutrit() {
        let z = WeylString::from_pairs(3, &[(0, 1)]).unwrap();
        let m = weyl_matrix(&z).unwrap();
        let expect = DenseOperator::diagonal(&[omega(3, 0), omega(3, 1), omega(3, 2)]);
        assert!(m.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn identity_string_is_identity_matrix() {
        for d in [2, 3, 5] {
            let id = WeylString::identity(DimVector::uniform(d, 2).unwrap());
            assert!(weyl_matrix(&id).unwrap().max_abs_diff(&DenseOperator::identity(d * d)) < 1e-15);
        }
    }

    #[test]
    fn xz_on_basis_states() {
        // X Z |k> = omega^k |k+1>
        let xz = weyl_matrix(&WeylString::from_pairs(3, &[(1, 1)]).unwrap()).unwrap();
        for k in 0..3 {
            let out = xz.apply(&StateVector::basis(3, k));
            let expect = StateVector::basis(3, (k + 1) % 3).scale(omega(3, k));
            assert!(out.max_abs_diff(&expect) < 1e-15);
        }
    }

    #[test]
    fn shift_boost_ordering() {
        let x = WeylString::from_pairs(3, &[(1, 0)]).unwrap();
        let z = WeylString::from_pairs(3, &[(0, 1)]).unwrap();
        let xz = x.multiply(&z).unwrap();
        assert_eq!((xz.x()[0], xz.z()[0]), (1, 1));
        assert!(xz.phase().is_one());
        let zx = z.multiply(&x).unwrap();
        assert_eq!((zx.x()[0], zx.z()[0]), (1, 1));
        assert_eq!(zx.phase(), Phase::root(1, 3, 3));
    }

    #[test]
    fn times_adjoint_is_identity() {
        let w = WeylString::from_pairs(5, &[(2, 3), (0, 4), (1, 1)]).unwrap();
        let p = w.multiply(&w.adjoint()).unwrap();
        assert!(p.is_identity() && p.phase().is_one());
        let q = w.adjoint().multiply(&w).unwrap();
        assert!(q.is_identity() && q.phase().is_one());
    }

    #[test]
    fn adjoint_matches_matrix() {
        let w = WeylString::from_pairs(3, &[(1, 2), (2, 2)]).unwrap();
        let m = weyl_matrix(&w).unwrap().adjoint();
        assert!(weyl_matrix(&w.adjoint()).unwrap().max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn qubit_y_representative() {
        let xz = WeylString::from_pairs(2, &[(1, 1)]).unwrap();
        let y = weyl_matrix(&xz.cyclic_representative()).unwrap();
        let expect = DenseOperator::from_fn(2, |i, j| match (i, j) {
            (0, 1) => C64::new(0.0, -1.0),
            (1, 0) => C64::new(0.0, 1.0),
            _ => ZERO,
        });
        assert!(y.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn cyclic_representative_is_power() {
        let d = 5;
        for a in 0..d {
            let gen = WeylString::from_pairs(d, &[(1, a)]).unwrap();
            for k in 1..d {
                let power = gen.pow(k);
                assert_eq!(power.normalized().cyclic_representative(), power);
            }
        }
    }

    #[test]
    fn lex_index_roundtrip() {
        let dims = DimVector::new(vec![2, 3, 5]).unwrap();
        for idx in 0..(4 * 9 * 25) as u128 {
            assert_eq!(WeylString::from_lex_index(&dims, idx).lex_index(), idx);
        }
    }

    #[test]
    fn mismatched_dims_error() {
        let a = WeylString::from_pairs(3, &[(1, 0)]).unwrap();
        let b = WeylString::from_pairs(5, &[(1, 0)]).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn dense_cap_respected() {
        let w = WeylString::identity(DimVector::uniform(3, 4).unwrap());
        let limits = Limits { dense_dim: 27, ..Limits::default() };
        assert!(matches!(w.to_matrix(&limits), Err(Error::DenseCapExceeded { .. })));
    }
}
