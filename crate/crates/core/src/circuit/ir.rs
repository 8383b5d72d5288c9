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
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WireKind {
    Qudit(usize),
    Qubit,
}

/// Single-qubit gates that may sit under any number of controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitBase {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    /// `-S = diag(-1, -i)`
    NegS,
    /// `-S^dagger = diag(-1, i)`
    NegSdg,
    /// the matrix `Z H`
    Hz,
    /// the matrix `H Z`
    Zh,
    Ry,
}

impl QubitBase {
    const NAMES: [(&'static str, QubitBase); 11] = [
        ("h", QubitBase::H),
        ("x", QubitBase::X),
        ("y", QubitBase::Y),
        ("z", QubitBase::Z),
        ("s", QubitBase::S),
        ("sdg", QubitBase::Sdg),
        ("ns", QubitBase::NegS),
        ("nsdg", QubitBase::NegSdg),
        ("hz", QubitBase::Hz),
        ("zh", QubitBase::Zh),
        ("ry", QubitBase::Ry),
    ];

    pub fn name(self) -> &'static str {
        QubitBase::NAMES.iter().find(|(_, b)| *b == self).map(|(n, _)| *n).unwrap_or("?")
    }

    fn parse(s: &str) -> Option<QubitBase> {
        QubitBase::NAMES.iter().find(|(n, _)| *n == s).map(|(_, b)| *b)
    }

    pub fn params(self) -> usize {
        usize::from(self == QubitBase::Ry)
    }

    pub fn adjoint(self) -> QubitBase {
        match self {
            QubitBase::S => QubitBase::Sdg,
            QubitBase::Sdg => QubitBase::S,
            QubitBase::NegS => QubitBase::NegSdg,
            QubitBase::NegSdg => QubitBase::NegS,
            QubitBase::Hz => QubitBase::Zh,
            QubitBase::Zh => QubitBase::Hz,
            b => b,
        }
    }
}

/// Qudit Clifford generators, their adjoints, and the shift/boost pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuditOp {
    H,
    Hdg,
    S,
    Sdg,
    X,
    Xdg,
    Z,
    Zdg,
    Cx,
    Cxdg,
}

impl QuditOp {
    const NAMES: [(&'static str, QuditOp); 10] = [
        ("h", QuditOp::H),
        ("hdg", QuditOp::Hdg),
        ("s", QuditOp::S),
        ("sdg", QuditOp::Sdg),
        ("x", QuditOp::X),
        ("xdg", QuditOp::Xdg),
        ("z", QuditOp::Z),
        ("zdg", QuditOp::Zdg),
        ("cx", QuditOp::Cx),
        ("cxdg", QuditOp::Cxdg),
    ];

    pub fn name(self) -> &'static str {
        QuditOp::NAMES.iter().find(|(_, o)| *o == self).map(|(n, _)| *n).unwrap_or("?")
    }

    fn parse(s: &str) -> Option<QuditOp> {
        QuditOp::NAMES.iter().find(|(n, _)| *n == s).map(|(_, o)| *o)
    }

    pub fn arity(self) -> usize {
        if matches!(self, QuditOp::Cx | QuditOp::Cxdg) {
            2
        } else {
            1
        }
    }

    pub fn adjoint(self) -> QuditOp {
        use QuditOp::*;
        match self {
            H => Hdg,
            Hdg => H,
            S => Sdg,
            Sdg => S,
            X => Xdg,
            Xdg => X,
            Z => Zdg,
            Zdg => Z,
            Cx => Cxdg,
            Cxdg => Cx,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    Qudit(QuditOp),
    /// `controls[k]` is true for a closed (|1>) control and false for an open (|0>) one.
    Qubit { controls: Vec<bool>, base: QubitBase },
}

/// A gate acting on `targets`; for controlled qubit gates the controls come first.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub params: Vec<f64>,
}

impl Gate {
    pub fn qudit(op: QuditOp, targets: &[usize]) -> Gate {
        Gate { kind: GateKind::Qudit(op), targets: targets.to_vec(), params: vec![] }
    }

    pub fn qubit(controls: &[bool], base: QubitBase, targets: &[usize], params: &[f64]) -> Gate {
        Gate {
            kind: GateKind::Qubit { controls: controls.to_vec(), base },
            targets: targets.to_vec(),
            params: params.to_vec(),
        }
    }

    /// Parses names such as `cx`, `ory`, `cox` or `cxdg`.
    pub fn from_name(name: &str, kind: WireKind, targets: Vec<usize>, params: Vec<f64>) -> Result<Gate> {
        let gk = match kind {
            WireKind::Qudit(_) => GateKind::Qudit(QuditOp::parse(name).ok_or_else(|| Error::UnknownGate(name.into()))?),
            WireKind::Qubit => parse_qubit_name(name).ok_or_else(|| Error::UnknownGate(name.into()))?,
        };
        let gate = Gate { kind: gk, targets, params };
        gate.check_shape()?;
        Ok(gate)
    }

    pub fn name(&self) -> String {
        match &self.kind {
            GateKind::Qudit(op) => op.name().into(),
            GateKind::Qubit { controls, base } => {
                let mut s: String = controls.iter().map(|&c| if c { 'c' } else { 'o' }).collect();
                s.push_str(base.name());
                s
            }
        }
    }

    pub fn arity(&self) -> usize {
        match &self.kind {
            GateKind::Qudit(op) => op.arity(),
            GateKind::Qubit { controls, .. } => controls.len() + 1,
        }
    }

    fn check_shape(&self) -> Result<()> {
        let want_params = match &self.kind {
            GateKind::Qudit(_) => 0,
            GateKind::Qubit { base, .. } => base.params(),
        };
        if self.targets.len() != self.arity() {
            return Err(Error::MalformedGate(format!("{} takes {} wires, got {}", self.name(), self.arity(), self.targets.len())));
        }
        if self.params.len() != want_params {
            return Err(Error::MalformedGate(format!("{} takes {} params, got {}", self.name(), want_params, self.params.len())));
        }
        for (i, t) in self.targets.iter().enumerate() {
            if self.targets[..i].contains(t) {
                return Err(Error::MalformedGate(format!("{} repeats wire {t}", self.name())));
            }
        }
        Ok(())
    }

    pub fn adjoint(&self) -> Gate {
        match &self.kind {
            GateKind::Qudit(op) => Gate::qudit(op.adjoint(), &self.targets),
            GateKind::Qubit { controls, base } => Gate {
                kind: GateKind::Qubit { controls: controls.clone(), base: base.adjoint() },
                targets: self.targets.clone(),
                params: self.params.iter().map(|p| -p).collect(),
            },
        }
    }
}

fn parse_qubit_name(name: &str) -> Option<GateKind> {
    let split = name.find(|c| c != 'c' && c != 'o')?;
    let (prefix, rest) = name.split_at(split);
    let base = QubitBase::parse(rest)?;
    Some(GateKind::Qubit { controls: prefix.chars().map(|c| c == 'c').collect(), base })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    wires: usize,
    kind: WireKind,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(kind: WireKind, wires: usize) -> Result<Circuit> {
        if let WireKind::Qudit(d) = kind {
            if d < 2 {
                return Err(Error::InvalidDims(format!("qudit dimension {d}")));
            }
        }
        Ok(Circuit { wires, kind, gates: Vec::new() })
    }

    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn kind(&self) -> WireKind {
        self.kind
    }

    pub fn wire_dim(&self) -> usize {
        match self.kind {
            WireKind::Qudit(d) => d,
            WireKind::Qubit => 2,
        }
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let matches = matches!(
            (&gate.kind, self.kind),
            (GateKind::Qudit(_), WireKind::Qudit(_)) | (GateKind::Qubit { .. }, WireKind::Qubit)
        );
        if !matches {
            return Err(Error::MalformedGate(format!("{} does not act on {:?} wires", gate.name(), self.kind)));
        }
        gate.check_shape()?;
        if let Some(&t) = gate.targets.iter().find(|&&t| t >= self.wires) {
            return Err(Error::MalformedGate(format!("wire {t} out of range for {} wires", self.wires)));
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        gates.into_iter().try_for_each(|g| self.push(g))
    }

    /// Reversed sequence of adjoint gates.
    pub fn adjoint(&self) -> Circuit {
        Circuit { wires: self.wires, kind: self.kind, gates: self.gates.iter().rev().map(Gate::adjoint).collect() }
    }

    /// As-soon-as-possible layer count.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.wires];
        for g in &self.gates {
            let next = g.targets.iter().map(|&t| level[t]).max().unwrap_or(0) + 1;
            g.targets.iter().for_each(|&t| level[t] = next);
        }
        level.into_iter().max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WireKind::Qudit(d) => writeln!(f, "circuit qudit {d} {}", self.wires)?,
            WireKind::Qubit => writeln!(f, "circuit qubit {}", self.wires)?,
        }
        for g in &self.gates {
            write!(f, "{}", g.name())?;
            for t in &g.targets {
                write!(f, " {t}")?;
            }
            for p in &g.params {
                write!(f, " {p:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Circuit> {
        let mut circuit: Option<Circuit> = None;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line, msg };
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                circuit = Some(parse_header(&tokens).map_err(perr)?);
                continue;
            };
            let arity = match c.kind {
                WireKind::Qudit(_) => QuditOp::parse(tokens[0]).map(QuditOp::arity),
                WireKind::Qubit => match parse_qubit_name(tokens[0]) {
                    Some(GateKind::Qubit { controls, .. }) => Some(controls.len() + 1),
                    _ => None,
                },
            }
            .ok_or_else(|| perr(format!("unknown gate `{}`", tokens[0])))?;
            if tokens.len() < 1 + arity {
                return Err(perr(format!("`{}` needs {arity} wires", tokens[0])));
            }
            let targets = tokens[1..=arity]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|e| perr(format!("bad wire `{t}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let params = tokens[1 + arity..]
                .iter()
                .map(|t| t.parse::<f64>().map_err(|e| perr(format!("bad parameter `{t}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let gate = Gate::from_name(tokens[0], c.kind, targets, params).map_err(|e| perr(e.to_string()))?;
            c.push(gate).map_err(|e| perr(e.to_string()))?;
        }
        circuit.ok_or(Error::Parse { line: 0, msg: "missing `circuit` header".into() })
    }
}

fn parse_header(tokens: &[&str]) -> std::result::Result<Circuit, String> {
    let num = |s: &str| s.parse::<usize>().map_err(|e| format!("bad number `{s}`: {e}"));
    match tokens {
        ["circuit", "qudit", d, w] => Circuit::new(WireKind::Qudit(num(d)?), num(w)?).map_err(|e| e.to_string()),
        ["circuit", "qubit", w] => Circuit::new(WireKind::Qubit, num(w)?).map_err(|e| e.to_string()),
        _ => Err("expected `circuit qudit <d> <wires>` or `circuit qubit <wires>`".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let g = Gate::from_name("cory", WireKind::Qubit, vec![0, 1, 2], vec![0.5]).unwrap();
        assert_eq!(g.name(), "cory");
        assert_eq!(g.arity(), 3);
        assert!(matches!(Gate::from_name("qq", WireKind::Qubit, vec![0], vec![]), Err(Error::UnknownGate(_))));
        assert!(matches!(Gate::from_name("cx", WireKind::Qudit(3), vec![0, 0], vec![]), Err(Error::MalformedGate(_))));
    }

    #[test]
    fn text_round_trip() {
        let text = "# bell\ncircuit qudit 3 3\ncxdg 1 2\ncxdg 0 1  # chain\nh 0\n";
        let c: Circuit = text.parse().unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.to_text().parse::<Circuit>().unwrap(), c);
        let q: Circuit = "circuit qubit 2\nory 0 1 -0.9553166181245093\n".parse().unwrap();
        assert_eq!(q.to_text().parse::<Circuit>().unwrap(), q);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = "circuit qudit 3 2\nh 0\ncx 0 5\n".parse::<Circuit>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!("h 0\n".parse::<Circuit>(), Err(Error::Parse { line: 1, .. })));
        assert!(matches!("circuit qubit 1\nry 0\n".parse::<Circuit>(), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn depth_counts_layers() {
        let mut c = Circuit::new(WireKind::Qudit(3), 4).unwrap();
        c.extend([Gate::qudit(QuditOp::H, &[0]), Gate::qudit(QuditOp::H, &[2]), Gate::qudit(QuditOp::Cx, &[0, 1])]).unwrap();
        assert_eq!(c.depth(), 2);
        assert_eq!(c.adjoint().gates()[0], Gate::qudit(QuditOp::Cxdg, &[0, 1]));
    }
}
