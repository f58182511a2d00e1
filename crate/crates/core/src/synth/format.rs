//! Gate-list text and OpenQASM export.
//!
//! ```text
//! # comment
//! qubits 4
//! mcx q0 q1 q2 : q3
//! mcx q0 : q3
//! x q3
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{Circuit, Gate};

pub fn to_gate_list(c: &Circuit) -> String {
    let mut out = format!("qubits {}\n", c.width());
    for g in c.gates() {
        if g.is_not() {
            let _ = writeln!(out, "x q{}", g.target());
        } else {
            out.push_str("mcx");
            for q in g.controls() {
                let _ = write!(out, " q{q}");
            }
            let _ = writeln!(out, " : q{}", g.target());
        }
    }
    out
}

fn qubit(tok: &str, line: usize, col: usize) -> Result<usize> {
    tok.strip_prefix('q')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::parse(line, col, format!("expected qubit like q0, got {tok:?}")))
}

pub fn parse_gate_list(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - raw.as_ptr() as usize + 1, t))
            .collect();
        let (col0, op) = toks[0];
        if op == "qubits" {
            if circuit.is_some() {
                return Err(Error::parse(lineno, col0, "duplicate qubits header"));
            }
            let &[_, (col, w)] = toks.as_slice() else {
                return Err(Error::parse(lineno, col0, "expected `qubits <width>`"));
            };
            let width: usize = w
                .parse()
                .map_err(|_| Error::parse(lineno, col, format!("invalid width {w:?}")))?;
            circuit = Some(Circuit::new(width).map_err(|e| Error::parse(lineno, col, e.to_string()))?);
            continue;
        }
        let Some(c) = circuit.as_mut() else {
            return Err(Error::parse(lineno, col0, "gate before `qubits` header"));
        };
        let gate = match op {
            "x" => {
                let &[_, (col, q)] = toks.as_slice() else {
                    return Err(Error::parse(lineno, col0, "expected `x q<i>`"));
                };
                Gate::not(qubit(q, lineno, col)?)
                    .map_err(|e| Error::parse(lineno, col, e.to_string()))?
            }
            "mcx" => {
                let colon = toks
                    .iter()
                    .position(|&(_, t)| t == ":")
                    .ok_or_else(|| Error::parse(lineno, col0, "expected ':' before target"))?;
                if colon + 2 != toks.len() {
                    return Err(Error::parse(
                        lineno,
                        toks[colon].0,
                        "expected exactly one target after ':'",
                    ));
                }
                let controls = toks[1..colon]
                    .iter()
                    .map(|&(col, t)| qubit(t, lineno, col))
                    .collect::<Result<Vec<_>>>()?;
                let (col, t) = toks[colon + 1];
                Gate::new(controls, qubit(t, lineno, col)?)
                    .map_err(|e| Error::parse(lineno, col, e.to_string()))?
            }
            other => {
                return Err(Error::parse(lineno, col0, format!("unknown gate {other:?}")));
            }
        };
        c.push(gate)
            .map_err(|e| Error::parse(lineno, col0, e.to_string()))?;
    }
    circuit.ok_or_else(|| Error::parse(0, 0, "missing `qubits <width>` header"))
}

/// OpenQASM 2.0 text. Gates with three or more controls use an `mcx`
/// mnemonic that is not part of `qelib1.inc`.
pub fn to_qasm(c: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", c.width());
    let mut noted = false;
    for g in c.gates() {
        let args: Vec<String> = g
            .controls()
            .chain(std::iter::once(g.target()))
            .map(|q| format!("q[{q}]"))
            .collect();
        let mnemonic = match g.control_count() {
            0 => "x",
            1 => "cx",
            2 => "ccx",
            _ => {
                if !noted {
                    out.push_str("// mcx: multi-controlled X, non-standard extension\n");
                    noted = true;
                }
                "mcx"
            }
        };
        let _ = writeln!(out, "{mnemonic} {};", args.join(","));
    }
    out
}
