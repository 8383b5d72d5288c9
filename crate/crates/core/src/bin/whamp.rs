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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use whamp::circuit::{bell_measurement_circuit, transpile_qutrit_to_qubit, verify_embedding, Circuit};
use whamp::experiment::{run_scaling, run_verification, ExperimentConfig, Strategy};
use whamp::{Error, Limits};

#[derive(Parser)]
#[command(name = "whamp", version, about = "Weyl-Heisenberg amplitude estimation experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample-complexity scaling of the three-copy and single-copy strategies.
    Scaling(ScalingArgs),
    /// Run a verification suite: norms, circuits, algebra, mimicking or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        /// Write the report here as well as to stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Emit, transpile or check circuits in the text format.
    #[command(subcommand)]
    Circuit(CircuitCmd),
}

#[derive(Args)]
struct ScalingArgs {
    /// TOML config with `[experiment]` and `[stats]` tables.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    p_star: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    growth: Option<f64>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    strategy: Option<String>,
}

#[derive(Subcommand)]
enum CircuitCmd {
    /// Print the coarse Bell measurement circuit.
    Emit {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Rewrite a qutrit circuit file over qubit pairs.
    Transpile { input: PathBuf },
    /// Compare a qutrit circuit with a qubit circuit on the embedded subspace.
    Verify { qutrit: PathBuf, qubit: PathBuf },
}

fn config_from(args: ScalingArgs) -> Result<ExperimentConfig, Error> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => {
            let seed = args.seed.ok_or_else(|| Error::Config("--seed is required without --config".into()))?;
            ExperimentConfig { seed, ..Default::default() }
        }
    };
    macro_rules! over {
        ($($f:ident),*) => { $(if let Some(v) = args.$f { cfg.$f = v; })* };
    }
    over!(d, n_min, n_max, epsilon, delta, p_star, alpha, growth, t_max, seed, out);
    if let Some(s) = &args.strategy {
        cfg.strategy = s.parse::<Strategy>()?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read_circuit(path: &PathBuf) -> Result<Circuit, Error> {
    std::fs::read_to_string(path)?.parse()
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Command::Scaling(args) => {
            let cfg = config_from(args)?;
            let report = run_scaling(&cfg, |row| {
                eprintln!("n={} {:<18} N_min={} trials={} p_hat={:.3}", row.n, row.strategy, row.n_min, row.trials, row.p_hat)
            })?;
            println!("wrote {} and {}", report.csv.display(), report.meta.display());
            Ok(true)
        }
        Command::Verify { suite, report } => {
            let result = run_verification(suite.parse()?)?;
            print!("{result}");
            if let Some(path) = report {
                std::fs::write(path, result.to_string())?;
            }
            Ok(result.passed())
        }
        Command::Circuit(CircuitCmd::Emit { d, n }) => {
            print!("{}", bell_measurement_circuit(d, n)?);
            Ok(true)
        }
        Command::Circuit(CircuitCmd::Transpile { input }) => {
            print!("{}", transpile_qutrit_to_qubit(&read_circuit(&input)?)?);
            Ok(true)
        }
        Command::Circuit(CircuitCmd::Verify { qutrit, qubit }) => {
            let r = verify_embedding(&read_circuit(&qutrit)?, &read_circuit(&qubit)?, &Limits::default())?;
            println!(
                "residual={:.3e} leakage={:.3e} phase={:.6}{:+.6}i {}",
                r.residual,
                r.leakage,
                r.global_phase.re,
                r.global_phase.im,
                if r.passed() { "PASS" } else { "FAIL" }
            );
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ (Error::Config(_) | Error::Parse { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
