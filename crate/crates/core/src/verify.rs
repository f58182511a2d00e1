//! Classical simulation of multi-controlled-NOT circuits on computational
//! basis states, and exhaustive circuit-vs-truth-table verification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{variable_word, word_count};
use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::par::{map_indices, Execution};
use crate::synth::{Circuit, Gate, MAX_WIDTH};

/// Basis state of `width` qubits; qubit `i` is bit `i` of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisState {
    width: usize,
    bits: u64,
}

impl BasisState {
    pub fn new(width: usize, bits: u64) -> Result<Self> {
        if !(1..=MAX_WIDTH).contains(&width) {
            return Err(Error::Limit {
                what: "state width",
                value: width,
                min: 1,
                max: MAX_WIDTH,
            });
        }
        if width < 64 && bits >> width != 0 {
            return Err(Error::Range {
                what: "basis state",
                index: bits,
                bound: 1 << width,
            });
        }
        Ok(BasisState { width, bits })
    }

    /// Builds a state from per-qubit values, qubit 0 first.
    pub fn from_qubits(values: &[bool]) -> Result<Self> {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | (v as u64) << i);
        BasisState::new(values.len(), bits)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn qubit(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn qubits(&self) -> Vec<bool> {
        (0..self.width).map(|i| self.qubit(i)).collect()
    }
}

impl fmt::Display for BasisState {
    /// Qubit values separated by spaces, qubit 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if self.qubit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Flips the target iff all controls are 1.
pub fn apply_gate(s: BasisState, g: &Gate) -> Result<BasisState> {
    let used = g.control_mask() | 1 << g.target();
    let needed = 64 - used.leading_zeros() as usize;
    if needed > s.width {
        return Err(Error::Width {
            expected: needed,
            got: s.width,
        });
    }
    let mut bits = s.bits;
    if bits & g.control_mask() == g.control_mask() {
        bits ^= 1 << g.target();
    }
    Ok(BasisState { bits, ..s })
}

pub fn run_circuit(c: &Circuit, s: BasisState) -> Result<BasisState> {
    if c.width() != s.width {
        return Err(Error::Width {
            expected: c.width(),
            got: s.width,
        });
    }
    c.gates().iter().try_fold(s, apply_gate)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Input assignment, `x_k` at bit `k`.
    pub input: u32,
    pub expected: bool,
    pub got: bool,
    pub inputs_restored: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    /// Sorted by input assignment.
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    fn from_counterexamples(counterexamples: Vec<Counterexample>) -> Self {
        VerifyReport {
            passed: counterexamples.is_empty(),
            counterexamples,
        }
    }

    /// Line-oriented report: `PASS`, or `FAIL <count>` followed by one
    /// `input=.. expected=.. got=.. restored=..` line per counterexample.
    pub fn to_text(&self) -> String {
        if self.passed {
            return "PASS\n".to_string();
        }
        let mut out = format!("FAIL {}\n", self.counterexamples.len());
        for c in &self.counterexamples {
            out.push_str(&format!(
                "input={} expected={} got={} restored={}\n",
                c.input, c.expected as u8, c.got as u8, c.inputs_restored
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check_widths(c: &Circuit, f: &BooleanFunction) -> Result<()> {
    if c.width() != f.vars() + 1 {
        return Err(Error::Width {
            expected: f.vars() + 1,
            got: c.width(),
        });
    }
    Ok(())
}

/// Runs every assignment with the target at 0 and checks that the target
/// ends as `f(a)` and every input qubit is restored.
pub fn verify_circuit(c: &Circuit, f: &BooleanFunction) -> Result<VerifyReport> {
    verify_circuit_with(c, f, Execution::default())
}

/// Bit-parallel verification: each 64-assignment block of the input space
/// is simulated as one word per qubit. Blocks are independent and may be
/// processed concurrently; the report is assembled in block order.
pub fn verify_circuit_with(
    c: &Circuit,
    f: &BooleanFunction,
    exec: Execution,
) -> Result<VerifyReport> {
    check_widths(c, f)?;
    let n = f.vars();
    let valid = if n < 6 { (1u64 << (1 << n)) - 1 } else { u64::MAX };
    let target_words = f.table().words();
    let gates = c.gates();

    let blocks = map_indices(exec, word_count(n), |w| {
        let initial: Vec<u64> = (0..n).map(|q| variable_word(q, w) & valid).collect();
        let mut state = initial.clone();
        state.push(0);
        for g in gates {
            let ctrl = g
                .controls()
                .fold(valid, |acc, q| acc & state[q]);
            state[g.target()] ^= ctrl;
        }
        let moved = (0..n).fold(0u64, |acc, q| acc | (state[q] ^ initial[q]));
        let expected = target_words[w];
        let got = state[n];
        let mut bad = ((got ^ expected) | moved) & valid;
        let mut found = Vec::new();
        while bad != 0 {
            let b = bad.trailing_zeros();
            bad &= bad - 1;
            found.push(Counterexample {
                input: (w as u32) << 6 | b,
                expected: expected >> b & 1 == 1,
                got: got >> b & 1 == 1,
                inputs_restored: moved >> b & 1 == 0,
            });
        }
        found
    });

    Ok(VerifyReport::from_counterexamples(
        blocks.into_iter().flatten().collect(),
    ))
}

/// Verification through [`run_circuit`], one basis state at a time.
pub fn verify_circuit_reference(c: &Circuit, f: &BooleanFunction) -> Result<VerifyReport> {
    check_widths(c, f)?;
    let n = f.vars();
    let mut found = Vec::new();
    for a in 0..1u32 << n {
        let out = run_circuit(c, BasisState::new(n + 1, a as u64)?)?;
        let expected = f.value(a as usize);
        let got = out.qubit(n);
        let restored = out.bits() & ((1 << n) - 1) == a as u64;
        if got != expected || !restored {
            found.push(Counterexample {
                input: a,
                expected,
                got,
                inputs_restored: restored,
            });
        }
    }
    Ok(VerifyReport::from_counterexamples(found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rm::{fprm_transform, parse_expression, pprm_transform, Expansion, Polarity};
    use crate::synth::{synth_fprm, synth_mixed, synth_pprm};

    fn three_gate() -> Circuit {
        Circuit::with_gates(
            3,
            [
                Gate::new([0, 1], 2).unwrap(),
                Gate::new([1], 2).unwrap(),
                Gate::not(2).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn apply_gate_examples() {
        let s = BasisState::from_qubits(&[true, false, true, false]).unwrap();
        let g = Gate::new([0, 2], 3).unwrap();
        assert!(apply_gate(s, &g).unwrap().qubit(3));

        let s = BasisState::new(3, 0b101).unwrap();
        let out = apply_gate(s, &Gate::not(1).unwrap()).unwrap();
        assert_eq!(out.bits(), 0b111);

        let s = BasisState::from_qubits(&[true, false, false]).unwrap();
        let out = apply_gate(s, &Gate::new([0, 1], 2).unwrap()).unwrap();
        assert_eq!(out, s);

        assert!(matches!(
            apply_gate(BasisState::new(2, 0).unwrap(), &Gate::not(2).unwrap()),
            Err(Error::Width { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn run_circuit_examples() {
        let s = BasisState::from_qubits(&[true, true, false]).unwrap();
        assert_eq!(run_circuit(&three_gate(), s).unwrap().to_string(), "1 1 1");

        let empty = Circuit::new(2).unwrap();
        let s = BasisState::new(2, 0b10).unwrap();
        assert_eq!(run_circuit(&empty, s).unwrap(), s);

        for a in 0..4u64 {
            let (x0, x1) = (a & 1 == 1, a & 2 == 2);
            let out = run_circuit(&three_gate(), BasisState::new(3, a).unwrap()).unwrap();
            assert_eq!(out.qubit(2), x0 || !x1);
        }
        assert!(run_circuit(&three_gate(), BasisState::new(4, 0).unwrap()).is_err());
    }

    #[test]
    fn verify_examples() {
        let f = BooleanFunction::from_table_hex(3, "D5").unwrap();
        let c = synth_fprm(&fprm_transform(&f, Polarity::new(3, 5).unwrap()).unwrap()).unwrap();
        assert!(verify_circuit(&c, &f).unwrap().passed);

        let zero = BooleanFunction::constant(2, false).unwrap();
        assert!(verify_circuit(&Circuit::new(3).unwrap(), &zero).unwrap().passed);

        let e = parse_expression("~x0*x1*x2 ^ x0*~x1 ^ x0 ^ ~x2 ^ 1", Some(3)).unwrap();
        let c = synth_mixed(&e).unwrap();
        assert!(verify_circuit(&c, &e.to_function()).unwrap().passed);

        assert!(matches!(
            verify_circuit(&Circuit::new(3).unwrap(), &f),
            Err(Error::Width { .. })
        ));
    }

    #[test]
    fn failures_are_reported_in_order() {
        let f = BooleanFunction::from_table_hex(3, "D5").unwrap();
        let mut gates = synth_pprm(&pprm_transform(&f)).unwrap().into_gates();
        gates.pop();
        let broken = Circuit::with_gates(4, gates).unwrap();
        let report = verify_circuit(&broken, &f).unwrap();
        assert!(!report.passed);
        assert_eq!(report.counterexamples.len(), 8);
        assert!(report.counterexamples.iter().all(|c| c.inputs_restored && c.got != c.expected));
        assert_eq!(report, verify_circuit_reference(&broken, &f).unwrap());

        // a stray NOT on an input leaves x1 flipped
        let mut gates = synth_pprm(&pprm_transform(&f)).unwrap().into_gates();
        gates.push(Gate::not(1).unwrap());
        let leaky = Circuit::with_gates(4, gates).unwrap();
        let report = verify_circuit(&leaky, &f).unwrap();
        assert_eq!(report.counterexamples.len(), 8);
        assert!(report.counterexamples.iter().all(|c| !c.inputs_restored && c.got == c.expected));
        let text = report.to_text();
        assert!(text.starts_with("FAIL 8\ninput=0 expected=1 got=1 restored=false\n"));
    }

    #[test]
    fn batch_matches_reference_on_wide_inputs() {
        let n = 8;
        let ms: Vec<u64> = (0..256).filter(|i| (i * 37 + 11) % 5 < 2).collect();
        let f = BooleanFunction::from_minterms(n, &ms).unwrap();
        let e = fprm_transform(&f, Polarity::new(n, 0b1011_0010).unwrap()).unwrap();
        let c = synth_fprm(&e).unwrap();
        let a = verify_circuit_with(&c, &f, Execution::Sequential).unwrap();
        let b = verify_circuit_with(&c, &f, Execution::Parallel).unwrap();
        assert!(a.passed);
        assert_eq!(a, b);

        let g = BooleanFunction::from_minterms(n, &ms[1..]).unwrap();
        let a = verify_circuit_with(&c, &g, Execution::Parallel).unwrap();
        assert_eq!(a, verify_circuit_reference(&c, &g).unwrap());
        assert_eq!(a.counterexamples.len(), 1);
        assert_eq!(a.counterexamples[0].input as u64, ms[0]);
    }

    #[test]
    fn json_report() {
        let report = VerifyReport::from_counterexamples(vec![Counterexample {
            input: 3,
            expected: true,
            got: false,
            inputs_restored: true,
        }]);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["passed"], false);
        assert_eq!(v["counterexamples"][0]["input"], 3);
        assert_eq!(v["counterexamples"][0]["inputs_restored"], true);
    }
}
