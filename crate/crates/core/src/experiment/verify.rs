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

use crate::bell::{bell_state, BellLabel};
use crate::circuit::{
    bell_measurement_circuit, circuit_unitary, transpile_qutrit_to_qubit, verify_embedding, Circuit, Gate, QuditOp,
    WireKind,
};
use crate::dense::{DenseOperator, Limits};
use crate::error::{Error, Result};
use crate::mimic::{build_mimicking_state, phase_error_bound, recover_phases, ExactOracle};
use crate::protocols::{spiked_state, AmplitudeTable, SampleMode};
use crate::seed;
use crate::theory::{operator_norm, twirl_norm_formula, twirl_operator, NormOptions, SignPattern, TwirlMethod};
use crate::weyl::{boost, enumerate_strings, hadamard, mub_bases, shift, DimVector, Phase, WeylString};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Norms,
    Circuits,
    Algebra,
    Mimicking,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "norms" => Ok(Suite::Norms),
            "circuits" => Ok(Suite::Circuits),
            "algebra" => Ok(Suite::Algebra),
            "mimicking" => Ok(Suite::Mimicking),
            "all" => Ok(Suite::All),
            other => Err(Error::Config(format!("unknown suite `{other}`"))),
        }
    }
}

/// One measured residual against its tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    fn push(&mut self, suite: &'static str, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.checks.push(Check { suite, name: name.into(), residual, tolerance });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<10} {:<44} residual={:.3e} tol={:.1e}", c.suite, c.name, c.residual, c.tolerance)?;
        }
        let failed = self.failures().count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

pub fn run_verification(suite: Suite) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let limits = Limits::default();
    if matches!(suite, Suite::Norms | Suite::All) {
        norms(&mut report, &limits)?;
    }
    if matches!(suite, Suite::Circuits | Suite::All) {
        circuits(&mut report, &limits)?;
    }
    if matches!(suite, Suite::Algebra | Suite::All) {
        algebra(&mut report, &limits)?;
    }
    if matches!(suite, Suite::Mimicking | Suite::All) {
        mimicking(&mut report, &limits)?;
    }
    Ok(report)
}

fn norms(report: &mut VerificationReport, limits: &Limits) -> Result<()> {
    let opts = NormOptions::default();
    for (d, m) in [(3, 1), (3, 2), (3, 3), (2, 1), (2, 2)] {
        let want = twirl_norm_formula(d, m);
        let worst = SignPattern::all(m)
            .iter()
            .map(|tau| Ok((operator_norm(&twirl_operator(d, tau, TwirlMethod::Brute, limits)?, &opts)? - want).abs()))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        report.push("norms", format!("d={d} m={m} all tau, norm {want}"), worst, 1e-9);
    }
    let mut rng = seed::rng(5);
    for m in [1, 2] {
        let mut worst: f64 = 0.0;
        for _ in 0..4 {
            let tau = SignPattern::random(m, &mut rng);
            let op = twirl_operator(5, &tau, TwirlMethod::Explicit, limits)?;
            worst = worst.max((operator_norm(&op, &opts)? - 5.0).abs());
        }
        report.push("norms", format!("d=5 m={m} random tau, norm 5"), worst, 1e-6);
    }
    Ok(())
}

fn circuits(report: &mut VerificationReport, limits: &Limits) -> Result<()> {
    let cases: [(&str, QuditOp, &[usize], usize); 3] =
        [("H3", QuditOp::H, &[0], 1), ("X3", QuditOp::X, &[0], 1), ("CX3", QuditOp::Cx, &[0, 1], 2)];
    for (name, op, targets, wires) in cases {
        let mut c = Circuit::new(WireKind::Qudit(3), wires)?;
        c.push(Gate::qudit(op, targets))?;
        let r = verify_embedding(&c, &transpile_qutrit_to_qubit(&c)?, limits)?;
        report.push("circuits", format!("{name} embedding"), r.residual.max(r.leakage), 1e-10);
    }
    let bell = bell_measurement_circuit(3, 1)?;
    let r = verify_embedding(&bell, &transpile_qutrit_to_qubit(&bell)?, limits)?;
    report.push("circuits", "d=3 n=1 measurement circuit embedding", r.residual.max(r.leakage), 1e-9);
    for d in [2, 3] {
        let u = circuit_unitary(&bell_measurement_circuit(d, 1)?, limits)?;
        let mut worst: f64 = 0.0;
        for w in enumerate_strings(&DimVector::uniform(d, 1)?, false, limits)? {
            let m = w.to_matrix(limits)?;
            let power = DenseOperator::kron_all(std::iter::repeat_n(&m, d));
            worst = worst.max((&(&u * &power) * &u.adjoint()).off_diagonal_mass());
        }
        report.push("circuits", format!("d={d} Bell circuit diagonalizes W^d"), worst, 1e-10);
    }
    Ok(())
}

fn algebra(report: &mut VerificationReport, limits: &Limits) -> Result<()> {
    for d in [3, 5] {
        let bases = mub_bases(d)?;
        let mut worst: f64 = 0.0;
        for (i, (_, a)) in bases.iter().enumerate() {
            for (j, (_, b)) in bases.iter().enumerate() {
                for (k, u) in a.iter().enumerate() {
                    for (l, v) in b.iter().enumerate() {
                        let want = if i == j { f64::from(u8::from(k == l)) } else { 1.0 / d as f64 };
                        worst = worst.max((u.inner(v).norm_sqr() - want).abs());
                    }
                }
            }
        }
        report.push("algebra", format!("d={d} MUB overlaps 1/d"), worst, 1e-12);
        let omega = Phase::root(1, d, d).to_complex();
        let (x, z, h) = (shift(d), boost(d), hadamard(d));
        report.push("algebra", format!("d={d} ZX = omega XZ"), (&z * &x).max_abs_diff(&(&x * &z).scale(omega)), 1e-12);
        report.push("algebra", format!("d={d} H X H^dagger = Z"), (&(&h * &x) * &h.adjoint()).max_abs_diff(&z), 1e-12);
    }
    let d = 3;
    let xs = WeylString::from_pairs(d, &[(1, 0); 3])?.to_matrix(limits)?;
    let zs = WeylString::from_pairs(d, &[(0, 1); 3])?.to_matrix(limits)?;
    let mut worst: f64 = 0.0;
    for label in BellLabel::all(d)? {
        let v = bell_state(&label);
        let ex = Phase::root(-(label.q() as i64), d, d).to_complex();
        let ez = Phase::root(label.s() as i64, d, d).to_complex();
        worst = worst.max(xs.apply(&v).max_abs_diff(&v.scale(ex)));
        worst = worst.max(zs.apply(&v).max_abs_diff(&v.scale(ez)));
    }
    report.push("algebra", "d=3 Bell eigenvalues omega^-q, omega^|I|", worst, 1e-10);
    Ok(())
}

fn mimicking(report: &mut VerificationReport, limits: &Limits) -> Result<()> {
    let eps = 0.3;
    let mut rng = seed::rng(17);
    for n in [1, 2] {
        let dims = DimVector::uniform(3, n)?;
        let strings: Vec<WeylString> = enumerate_strings(&dims, false, limits)?.skip(1).collect();
        let mut gap = f64::NEG_INFINITY;
        let mut phase_err: f64 = 0.0;
        for _ in 0..5 {
            let w = &strings[rand::Rng::random_range(&mut rng, 0..strings.len())];
            let rho = spiked_state(w, eps, limits)?;
            let u = AmplitudeTable::exact_from_state(&rho, &dims, limits)?;
            let run = build_mimicking_state(&u, &mut ExactOracle { rho: rho.clone() }, eps, limits)?.into_result()?;
            gap = gap.max(run.contract_gap(&u, eps)?);
            if n == 1 {
                let table = recover_phases(&run.sigma, &rho, &u, eps, SampleMode::Exact, 0, limits)?;
                phase_err = phase_err.max(table.max_error(&rho)?);
            }
        }
        report.push("mimicking", format!("n={n} contract |tr(W sigma)| >= eps/3"), gap.max(0.0), 1e-9);
        if n == 1 {
            report.push("mimicking", "n=1 phase recovery error minus 3^(d-1) eps", (phase_err - phase_error_bound(3, eps)).max(0.0), 0.0);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for suite in [Suite::Circuits, Suite::Algebra, Suite::Mimicking] {
            let report = run_verification(suite).unwrap();
            assert!(report.passed(), "{report}");
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Config(_))));
    }
}
