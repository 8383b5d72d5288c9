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

//! Acceptance criteria 1 to 11, one PASS/FAIL line each.
//!
//! Run a subset with `cargo test --test acceptance -- 3 7`.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_distr::{Binomial, Distribution};
use whamp::bell::{all_moments, bell_state, outcome_distribution, BellLabel, StateSpec};
use whamp::circuit::{bell_measurement_circuit, transpile_qutrit_to_qubit, verify_embedding, Circuit, Gate, QuditOp, WireKind};
use whamp::experiment::{scaling_rows, ExperimentConfig, ScalingRow};
use whamp::mimic::{build_mimicking_state, phase_error_bound, recover_phases, ExactOracle, SampledOracle};
use whamp::protocols::{
    amplitude_estimation, distinguish, hoeffding_sample_bound, spiked_state, AmplitudeTable, SampleMode, TaskInstance,
};
use whamp::stats::{certify_at_n, wilson_interval, Verdict, WilsonConfig};
use whamp::theory::{
    constrained_fourier_sum, delta_bound, mixed_twirl_norm, operator_norm, power_iteration_norm, twirl_operator,
    NormOptions, SignPattern, TwirlMethod,
};
use whamp::weyl::arith::twirl_phi;
use whamp::weyl::{enumerate_strings, DimVector, Phase};
use whamp::{seed, DenseOperator, Limits, Result, StateVector, WeylString, C64};

type Verdicts = Result<(bool, String)>;

fn non_identity(dims: &DimVector, limits: &Limits) -> Result<Vec<WeylString>> {
    Ok(enumerate_strings(dims, false, limits)?.skip(1).collect())
}

fn apply_string(w: &WeylString, v: &StateVector) -> StateVector {
    let mut out = vec![C64::default(); v.dim()];
    for (col, amp) in v.amplitudes().iter().enumerate() {
        let (row, ph) = w.act_on_basis(col);
        out[row] += amp * ph.to_complex();
    }
    StateVector::from_normalized(out)
}

fn c1_twirl_norms() -> Verdicts {
    let limits = Limits::default();
    let opts = NormOptions::default();
    let started = Instant::now();
    let mut worst3: f64 = 0.0;
    for (m, want) in [(1, 3.0), (2, 3.0), (3, 6.0)] {
        for tau in SignPattern::all(m) {
            let op = twirl_operator(3, &tau, TwirlMethod::Brute, &limits)?;
            worst3 = worst3.max((operator_norm(&op, &opts)? - want).abs());
        }
    }
    let mut rng = seed::rng(1);
    let mut worst5: f64 = 0.0;
    for m in [1, 2] {
        for _ in 0..8 {
            let op = twirl_operator(5, &SignPattern::random(m, &mut rng), TwirlMethod::Explicit, &limits)?;
            worst5 = worst5.max((operator_norm(&op, &opts)? - 5.0).abs());
        }
    }
    let big = twirl_operator(5, &SignPattern::all_plus(5), TwirlMethod::Explicit, &limits)?;
    let big_norm = power_iteration_norm(&big, &NormOptions { tol: 1e-6, restarts: 1, ..opts })?;
    let elapsed = started.elapsed();
    let ok = worst3 <= 1e-9 && worst5 <= 1e-6 && (big_norm - 20.0).abs() <= 1e-3 && elapsed <= Duration::from_secs(300);
    Ok((ok, format!("d=3 max dev {worst3:.1e}; d=5 m<=2 max dev {worst5:.1e}; d=5 m=5 norm {big_norm:.6}; {elapsed:.0?}")))
}

fn c2_qubit_lemma() -> Verdicts {
    let limits = Limits::default();
    let opts = NormOptions::default();
    let mut worst: f64 = 0.0;
    for (k, want) in [(1, 2.0), (2, 4.0)] {
        for tau in SignPattern::all(k) {
            worst = worst.max((operator_norm(&twirl_operator(2, &tau, TwirlMethod::Brute, &limits)?, &opts)? - want).abs());
        }
    }
    Ok((worst <= 1e-12, format!("max |norm - (2, 4)| = {worst:.1e}")))
}

fn c3_bell_eigen() -> Verdicts {
    let mut rng = seed::rng(3);
    let mut worst: f64 = 0.0;
    for d in [3, 5] {
        let xs = WeylString::from_pairs(d, &vec![(1, 0); d])?;
        let zs = WeylString::from_pairs(d, &vec![(0, 1); d])?;
        let labels = BellLabel::all(d)?;
        let picked: Vec<&BellLabel> =
            if d == 3 { labels.iter().collect() } else { (0..200).map(|_| &labels[rng.random_range(0..labels.len())]).collect() };
        for label in picked {
            let v = bell_state(label);
            let ex = Phase::root(-(label.q() as i64), d, d).to_complex();
            let ez = Phase::root(label.s() as i64, d, d).to_complex();
            worst = worst.max(apply_string(&xs, &v).max_abs_diff(&v.scale(ex)));
            worst = worst.max(apply_string(&zs, &v).max_abs_diff(&v.scale(ez)));
        }
    }
    Ok((worst <= 1e-10, format!("27 + 200 labels, max residual {worst:.1e}")))
}

fn moment_residual(dims: &DimVector, rho: &DenseOperator, limits: &Limits) -> Result<f64> {
    let dist = outcome_distribution(&StateSpec::Dense(rho.clone()), dims, limits)?;
    let c = dist.layout().copies() as u32;
    let moments = all_moments(dist.layout(), &dist.to_table(limits)?, limits)?;
    let mut worst: f64 = 0.0;
    for (w, m) in enumerate_strings(dims, false, limits)?.zip(moments) {
        worst = worst.max((m - w.expectation(rho)?.powu(c)).norm());
    }
    Ok(worst)
}

fn c4_moment_identity() -> Verdicts {
    let limits = Limits::default();
    let mut worst: f64 = 0.0;
    for n in [1, 2] {
        let dims = DimVector::uniform(3, n)?;
        for s in 0..20 {
            let rho = DenseOperator::random_density(3usize.pow(n as u32), 1 + s as usize % 3, 400 + s + 20 * n as u64);
            worst = worst.max(moment_residual(&dims, &rho, &limits)?);
        }
    }
    let mixed = DimVector::new(vec![2, 3])?;
    let mut worst_mixed: f64 = 0.0;
    for s in 0..20 {
        worst_mixed = worst_mixed.max(moment_residual(&mixed, &DenseOperator::random_density(6, 2, 900 + s), &limits)?);
    }
    Ok((worst <= 1e-10 && worst_mixed <= 1e-10, format!("d=3 n<=2 max {worst:.1e}; pattern (2,3) max {worst_mixed:.1e}")))
}

fn c5_distinguishing() -> Verdicts {
    let limits = Limits::default();
    let (n, eps) = (2, 0.3);
    let budget = hoeffding_sample_bound(3, n, eps, 0.1)? as usize;
    let strings = non_identity(&DimVector::uniform(3, n)?, &limits)?;
    let mut rng = seed::rng(5);
    let (mut null_ok, mut alt_ok) = (0, 0);
    for run in 0..20u64 {
        let null = TaskInstance::null(3, n)?;
        let t = amplitude_estimation(&null.state_spec(), &null.dims, SampleMode::Samples(budget), 2 * run, &limits)?;
        null_ok += usize::from(distinguish(&t, eps).null);
        let w = strings[rng.random_range(0..strings.len())].clone();
        let alt = TaskInstance::alternative(w, eps)?;
        let t = amplitude_estimation(&alt.state_spec(), &alt.dims, SampleMode::Samples(budget), 2 * run + 1, &limits)?;
        alt_ok += usize::from(!distinguish(&t, eps).null);
    }
    Ok((null_ok >= 18 && alt_ok >= 18, format!("N={budget}: null correct {null_ok}/20, alternative correct {alt_ok}/20")))
}

fn c6_scaling() -> Verdicts {
    let started = Instant::now();
    let cfg = ExperimentConfig { seed: 1, ..Default::default() };
    let rows = scaling_rows(&cfg, |_| {})?;
    let elapsed = started.elapsed();
    let pick = |s: &str| -> Vec<usize> { rows.iter().filter(|r: &&ScalingRow| r.strategy == s).map(|r| r.n_min).collect() };
    let (three, single, theory) = (pick("three-copy"), pick("single-copy"), pick("single-copy-theory"));
    let closed_ok = theory == [2, 10, 38, 154, 616, 2466];
    let within = single.iter().zip(&theory).all(|(&e, &t)| (e as f64 - t as f64).abs() <= 0.25 * t as f64);
    let ratio = |v: &[usize], k: usize| v[k + 1] as f64 / v[k] as f64;
    let single_growth = (2..5).all(|k| (3.0..=5.0).contains(&ratio(&single, k)));
    let three_growth = (2..5).all(|k| ratio(&three, k) <= 2.0);
    let ok = closed_ok && within && single_growth && three_growth && elapsed <= Duration::from_secs(600);
    Ok((ok, format!("three-copy {three:?}; single-copy {single:?}; closed form {theory:?}; {elapsed:.0?}")))
}

fn c7_wilson() -> Verdicts {
    let z = 1.6449;
    let mut rng = seed::rng(7);
    let binom = Binomial::new(200, 0.8).expect("valid binomial");
    let mut covered = 0;
    for _ in 0..1000 {
        let s = binom.sample(&mut rng) as usize;
        let (lo, hi) = wilson_interval(s, 200, z)?;
        covered += usize::from(lo <= 0.8 && 0.8 <= hi);
    }
    let cfg = WilsonConfig::default();
    let bern = |p: f64| move |_n: usize, s: u64| seed::rng(s).random::<f64>() < p;
    let (mut accepts, mut rejects) = (0, 0);
    for run in 0..100 {
        accepts += usize::from(certify_at_n(&bern(0.8), 100, &cfg, run)?.verdict == Verdict::Accept);
        rejects += usize::from(certify_at_n(&bern(0.55), 100, &cfg, 1000 + run)?.verdict == Verdict::EarlyReject);
    }
    let ok = covered >= 880 && accepts >= 95 && rejects >= 95;
    Ok((ok, format!("coverage {covered}/1000; accept p=0.8 {accepts}/100; early-reject p=0.55 {rejects}/100")))
}

fn planted(rng: &mut seed::Rng, limits: &Limits) -> Result<(DenseOperator, AmplitudeTable)> {
    let n = rng.random_range(1..=2);
    let dims = DimVector::uniform(3, n)?;
    let strings = non_identity(&dims, limits)?;
    let w = &strings[rng.random_range(0..strings.len())];
    let rho = spiked_state(w, 0.3, limits)?;
    let u = AmplitudeTable::exact_from_state(&rho, &dims, limits)?;
    Ok((rho, u))
}

fn c8_mimicking() -> Verdicts {
    let limits = Limits::default();
    let eps = 0.3;
    let mut rng = seed::rng(8);
    let (mut exact_ok, mut worst_gap) = (0, f64::NEG_INFINITY);
    for _ in 0..50 {
        let (rho, u) = planted(&mut rng, &limits)?;
        let run = build_mimicking_state(&u, &mut ExactOracle { rho }, eps, &limits)?;
        let gap = run.contract_gap(&u, eps)?;
        worst_gap = worst_gap.max(gap);
        exact_ok += usize::from(run.terminated_early && gap <= 1e-9);
    }
    let mut sampled_ok = 0;
    for k in 0..100 {
        let (rho, u) = planted(&mut rng, &limits)?;
        let t_cap = whamp::mimic::iteration_cap(u.dims().len(), eps);
        let mut oracle = SampledOracle::for_algorithm(rho, eps, t_cap, 8000 + k);
        let run = build_mimicking_state(&u, &mut oracle, eps, &limits)?;
        sampled_ok += usize::from(run.terminated_early && run.contract_gap(&u, eps)? <= 1e-9);
    }
    let ok = exact_ok == 50 && sampled_ok >= 95;
    Ok((ok, format!("exact {exact_ok}/50 (worst gap {worst_gap:.3}); sampled {sampled_ok}/100")))
}

fn c9_phase_recovery() -> Verdicts {
    let limits = Limits::default();
    let eps = 0.3;
    let dims = DimVector::uniform(3, 1)?;
    let strings = non_identity(&dims, &limits)?;
    let mut worst: f64 = 0.0;
    let mut recovered = 0;
    for k in 0..20u64 {
        let rho = if k < 8 {
            spiked_state(&strings[k as usize], eps, &limits)?
        } else {
            DenseOperator::random_density(3, 1, 90 + k)
        };
        let u = AmplitudeTable::exact_from_state(&rho, &dims, &limits)?;
        let run = build_mimicking_state(&u, &mut ExactOracle { rho: rho.clone() }, eps, &limits)?.into_result()?;
        let table = recover_phases(&run.sigma, &rho, &u, eps, SampleMode::Exact, 0, &limits)?;
        recovered += table.recovered_count();
        worst = worst.max(table.max_error(&rho)?);
    }
    let bound = phase_error_bound(3, eps);
    Ok((worst <= bound, format!("20 instances, {recovered} phases recovered, max error {worst:.1e} vs bound {bound:.2}")))
}

fn c10_transpiler() -> Verdicts {
    let limits = Limits::default();
    let mut lines = Vec::new();
    let mut ok = true;
    let mut cases: Vec<(&str, Circuit)> = Vec::new();
    for (name, op, targets, wires) in [("H3", QuditOp::H, vec![0], 1), ("X3", QuditOp::X, vec![0], 1), ("CX3", QuditOp::Cx, vec![0, 1], 2)] {
        let mut c = Circuit::new(WireKind::Qudit(3), wires)?;
        c.push(Gate::qudit(op, &targets))?;
        cases.push((name, c));
    }
    cases.push(("bell d=3 n=1", bell_measurement_circuit(3, 1)?));
    for (name, c) in cases {
        let r = verify_embedding(&c, &transpile_qutrit_to_qubit(&c)?, &limits)?;
        let res = r.residual.max(r.leakage);
        ok &= res <= 1e-9;
        lines.push(format!("{name} {res:.1e}"));
    }
    Ok((ok, lines.join("; ")))
}

fn c11_formulas() -> Verdicts {
    let delta = delta_bound(3, 1, 1.0 / 6.0, 2)?.tight;
    let mut fourier_ok = true;
    let mut checked = 0;
    for d in [3usize, 5] {
        for m in 1..=3u32 {
            let count = d.pow(m);
            for ai in 0..count / d {
                let a: Vec<usize> = std::iter::once(1).chain((0..m as usize - 1).map(|k| (ai / d.pow(k as u32)) % d)).collect();
                for bi in 0..count {
                    let b: Vec<usize> = (0..m as usize).map(|k| (bi / d.pow(k as u32)) % d).collect();
                    fourier_ok &= constrained_fourier_sum(d, &a, &b)?.agrees(1e-9);
                    checked += 1;
                }
            }
        }
    }
    let cap = 1.0 / twirl_phi(2) as f64;
    let mut mixed_ok = true;
    for m in (1..=30).filter(|m| m % 6 != 0) {
        mixed_ok &= mixed_twirl_norm(&[2, 3], m)?.1 <= cap + 1e-12;
    }
    let ok = (delta - 0.25).abs() < 1e-12 && fourier_ok && mixed_ok;
    Ok((ok, format!("delta_bound {delta}; {checked} Fourier sums agree: {fourier_ok}; mixed normalized <= {cap}: {mixed_ok}")))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdicts); 11] = [
        (1, "twirling norms", c1_twirl_norms),
        (2, "qubit Pauli lemma", c2_qubit_lemma),
        (3, "Bell eigen-relations", c3_bell_eigen),
        (4, "moment identity", c4_moment_identity),
        (5, "end-to-end distinguishing", c5_distinguishing),
        (6, "scaling shape", c6_scaling),
        (7, "Wilson calibration", c7_wilson),
        (8, "Algorithm 1 contract", c8_mimicking),
        (9, "phase recovery", c9_phase_recovery),
        (10, "transpiler", c10_transpiler),
        (11, "formula oracles", c11_formulas),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, check) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let started = Instant::now();
        let (ok, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        failed += usize::from(!ok);
        println!("{} {id:>2} {name}: {detail} [{:.1?}]", if ok { "PASS" } else { "FAIL" }, started.elapsed());
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
