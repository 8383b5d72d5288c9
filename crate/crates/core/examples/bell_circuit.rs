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

//! The coarse Bell measurement as a qutrit circuit, its qubit transpilation
//! and a check on the embedded subspace.

use whamp::circuit::{bell_measurement_circuit, transpile_qutrit_to_qubit, verify_embedding, decode_measurement, Circuit};
use whamp::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let qutrit = bell_measurement_circuit(3, 1)?;
    print!("{qutrit}");
    let qubit = transpile_qutrit_to_qubit(&qutrit)?;
    println!("transpiled: {} gates on {} qubits, depth {}", qubit.len(), qubit.wires(), qubit.depth());
    let text = qubit.to_text();
    let reparsed: Circuit = text.parse()?;
    let report = verify_embedding(&qutrit, &reparsed, &limits)?;
    println!("residual {:.2e}, leakage {:.2e}, passed {}", report.residual, report.leakage, report.passed());

    let four = bell_measurement_circuit(3, 4)?;
    println!("n=4: {} gates, depth {}", four.len(), four.depth());
    println!("readout (2,1,1) decodes to {:?}", decode_measurement(3, 1, &[2, 1, 1])?.pairs);
    Ok(())
}
