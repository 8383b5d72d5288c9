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

use crate::dense::{C64, ZERO};
use crate::error::{Error, Result};
use crate::weyl::arith::{is_prime, twirl_phi};
use crate::weyl::Phase;

/// `d(d-1)` when `d | m`, else `d`; for qubits `3 + (-1)^m`.
pub fn twirl_norm_formula(d: usize, m: usize) -> f64 {
    if d == 2 {
        return if m % 2 == 0 { 4.0 } else { 2.0 };
    }
    if m % d == 0 {
        (d * (d - 1)) as f64
    } else {
        d as f64
    }
}

/// `(prod_l p_l phi(p_l)^{[p_l | m]}, that / prod_l p_l phi(p_l))` with `phi(2) = 2`.
pub fn mixed_twirl_norm(dims: &[usize], m: usize) -> Result<(f64, f64)> {
    let distinct: HashSet<_> = dims.iter().collect();
    if dims.is_empty() || distinct.len() != dims.len() || !dims.iter().all(|&p| is_prime(p)) {
        return Err(Error::NotSquareFree(dims.to_vec()));
    }
    let raw: f64 = dims
        .iter()
        .map(|&p| (p * if m % p == 0 { twirl_phi(p) } else { 1 }) as f64)
        .product();
    let full: f64 = dims.iter().map(|&p| (p * twirl_phi(p)) as f64).product();
    Ok((raw, raw / full))
}

/// `sum_j (p_j - q_j)^2 / q_j`.
pub fn chi_squared(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch(format!("{} vs {} outcomes", p.len(), q.len())));
    }
    let mut acc = 0.0;
    for (j, (&pj, &qj)) in p.iter().zip(q).enumerate() {
        if qj <= 0.0 {
            if pj > 0.0 {
                return Err(Error::SupportViolation(j));
            }
            continue;
        }
        acc += (pj - qj).powi(2) / qj;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaBound {
    /// `((1 + 6 eps)^c - 1)^2 / (d - 1)^n`
    pub tight: f64,
    /// `(6 c eps e^{6 c eps})^2 / (d - 1)^n`
    pub relaxed: f64,
}

pub fn delta_bound(d: usize, c: usize, eps: f64, n: usize) -> Result<DeltaBound> {
    if c == 0 || eps <= 0.0 || d < 2 {
        return Err(Error::InvalidArgument("need c >= 1, eps > 0 and d >= 2".into()));
    }
    let denom = ((d - 1) as f64).powi(n as i32);
    let x = 6.0 * c as f64 * eps;
    Ok(DeltaBound {
        tight: ((1.0 + 6.0 * eps).powi(c as i32) - 1.0).powi(2) / denom,
        relaxed: (x * x.exp()).powi(2) / denom,
    })
}

/// Reference line `(d-1)^n / (c eps^2)`, implied constant taken as 1.
pub fn lower_bound_samples(d: usize, c: usize, eps: f64, n: usize) -> Result<f64> {
    if c >= d {
        return Err(Error::VoidBound(format!("c = {c} copies is not below d = {d}")));
    }
    if c == 0 || eps <= 0.0 {
        return Err(Error::InvalidArgument("need c >= 1 and eps > 0".into()));
    }
    Ok(((d - 1) as f64).powi(n as i32) / (c as f64 * eps * eps))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierSum {
    pub brute: C64,
    /// `d^{m-1} [b = b_1 a]`
    pub closed: C64,
}

impl FourierSum {
    pub fn agrees(&self, tol: f64) -> bool {
        (self.brute - self.closed).norm() <= tol
    }
}

/// `sum_{I in Z_d^m, <a, I> = 0} omega^{<b, I>}`, by enumeration and in closed form.
pub fn constrained_fourier_sum(d: usize, a: &[usize], b: &[usize]) -> Result<FourierSum> {
    let m = a.len();
    if b.len() != m || m == 0 {
        return Err(Error::DimensionMismatch("a and b must have the same nonzero length".into()));
    }
    if a[0] % d != 1 {
        return Err(Error::InvalidArgument("the closed form needs a_1 = 1".into()));
    }
    if m > 8 {
        return Err(Error::EnumerationCapExceeded { count: (d as u128).pow(m as u32), cap: (d as u128).pow(8) });
    }
    let mut brute = ZERO;
    let mut digits = vec![0usize; m];
    for idx in 0..d.pow(m as u32) {
        let mut rem = idx;
        for slot in digits.iter_mut().rev() {
            *slot = rem % d;
            rem /= d;
        }
        let dot = |v: &[usize]| v.iter().zip(&digits).map(|(x, y)| x * y).sum::<usize>() % d;
        if dot(a) == 0 {
            brute += Phase::root(dot(b) as i64, d, d).to_complex();
        }
    }
    let proportional = a.iter().zip(b).all(|(&ai, &bi)| (b[0] * ai) % d == bi % d);
    let closed = if proportional { C64::new(d.pow(m as u32 - 1) as f64, 0.0) } else { ZERO };
    Ok(FourierSum { brute, closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_formulas() {
        assert_eq!(twirl_norm_formula(3, 1), 3.0);
        assert_eq!(twirl_norm_formula(3, 3), 6.0);
        assert_eq!(twirl_norm_formula(2, 1), 2.0);
        assert_eq!(twirl_norm_formula(2, 2), 4.0);
        assert_eq!(twirl_norm_formula(5, 10), 20.0);
        assert_eq!(mixed_twirl_norm(&[2, 3], 1).unwrap().0, 6.0);
        assert_eq!(mixed_twirl_norm(&[2, 3], 6).unwrap().0, 24.0);
        assert!(mixed_twirl_norm(&[3, 3], 1).is_err());
    }

    #[test]
    fn chi2() {
        assert_eq!(chi_squared(&[0.2, 0.8], &[0.2, 0.8]).unwrap(), 0.0);
        assert!((chi_squared(&[1.0, 0.0], &[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(chi_squared(&[0.5, 0.5], &[1.0, 0.0]), Err(Error::SupportViolation(1))));
    }

    #[test]
    fn delta_and_lower_bound() {
        let b = delta_bound(3, 1, 1.0 / 6.0, 2).unwrap();
        assert!((b.tight - 0.25).abs() < 1e-12);
        assert!(b.tight <= b.relaxed);
        assert!((lower_bound_samples(3, 2, 0.3, 4).unwrap() - 16.0 / 0.18).abs() < 1e-9);
        assert!(matches!(lower_bound_samples(3, 3, 0.3, 4), Err(Error::VoidBound(_))));
    }

    #[test]
    fn fourier_examples() {
        let s = constrained_fourier_sum(3, &[1, 1], &[2, 2]).unwrap();
        assert!((s.brute - C64::new(3.0, 0.0)).norm() < 1e-12 && s.agrees(1e-12));
        let s = constrained_fourier_sum(3, &[1, 1], &[2, 1]).unwrap();
        assert!(s.brute.norm() < 1e-12 && s.agrees(1e-12));
        let s = constrained_fourier_sum(5, &[1, 0, 0], &[0, 0, 0]).unwrap();
        assert!((s.brute.re - 25.0).abs() < 1e-12);
        assert!(constrained_fourier_sum(3, &[2, 1], &[0, 0]).is_err());
    }
}
