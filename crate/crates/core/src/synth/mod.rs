//! Multi-controlled-NOT circuits and the three Reed-Muller synthesis
//! procedures (positive, fixed and mixed polarity).
//!
//! Circuits have `n + 1` qubits: inputs `x_0..x_{n-1}` on qubits
//! `0..n` and the target, initialised to 0, on qubit `n`.

mod format;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rm::{MixedExpansion, RmExpansion};

pub use format::{parse_gate_list, to_gate_list, to_qasm};

/// Widest circuit representable; control sets are `u64` masks.
pub const MAX_WIDTH: usize = 64;

/// `CNOT(C|t)`: flips `target` iff every qubit in `controls` is 1.
/// An empty control set is a plain NOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    controls: u64,
    target: usize,
}

impl Gate {
    pub fn new(controls: impl IntoIterator<Item = usize>, target: usize) -> Result<Self> {
        let mut mask = 0u64;
        for q in controls {
            if q >= MAX_WIDTH {
                return Err(Error::Range {
                    what: "control qubit",
                    index: q as u64,
                    bound: MAX_WIDTH as u64,
                });
            }
            mask |= 1 << q;
        }
        Gate::from_mask(mask, target)
    }

    pub fn from_mask(controls: u64, target: usize) -> Result<Self> {
        if target >= MAX_WIDTH {
            return Err(Error::Range {
                what: "target qubit",
                index: target as u64,
                bound: MAX_WIDTH as u64,
            });
        }
        if controls >> target & 1 == 1 {
            return Err(Error::WrongProcedure(format!(
                "target qubit {target} is also a control"
            )));
        }
        Ok(Gate { controls, target })
    }

    pub fn not(target: usize) -> Result<Self> {
        Gate::from_mask(0, target)
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn control_mask(&self) -> u64 {
        self.controls
    }

    /// Control qubits in ascending order.
    pub fn controls(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_WIDTH).filter(|q| self.controls >> q & 1 == 1)
    }

    pub fn control_count(&self) -> usize {
        self.controls.count_ones() as usize
    }

    pub fn is_not(&self) -> bool {
        self.controls == 0
    }

    /// Whether the gate reads or writes qubit `q`.
    pub fn touches(&self, q: usize) -> bool {
        self.target == q || self.controls >> q & 1 == 1
    }

    /// One past the highest qubit index used.
    fn span(&self) -> usize {
        let top_control = 64 - self.controls.leading_zeros() as usize;
        top_control.max(self.target + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Result<Self> {
        if !(1..=MAX_WIDTH).contains(&width) {
            return Err(Error::Limit {
                what: "circuit width",
                value: width,
                min: 1,
                max: MAX_WIDTH,
            });
        }
        Ok(Circuit {
            width,
            gates: Vec::new(),
        })
    }

    pub fn with_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Circuit::new(width)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        if gate.span() > self.width {
            return Err(Error::Range {
                what: "qubit",
                index: gate.span() as u64 - 1,
                bound: self.width as u64,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
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

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    fn push_unchecked(&mut self, gate: Gate) {
        debug_assert!(gate.span() <= self.width);
        self.gates.push(gate);
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_gate_list(self))
    }
}

fn term_gate(mask: u32, target: usize) -> Gate {
    Gate {
        controls: mask as u64,
        target,
    }
}

fn not_gate(q: usize) -> Gate {
    Gate {
        controls: 0,
        target: q,
    }
}

/// One gate per product term, targeting the ancilla. Requires polarity 0.
pub fn synth_pprm(e: &RmExpansion) -> Result<Circuit> {
    if !e.polarity().is_positive() {
        return Err(Error::WrongProcedure(format!(
            "expansion has polarity {}; use synth_fprm for non-positive polarities",
            e.polarity().bits()
        )));
    }
    synth_fprm(e)
}

/// Fixed-polarity synthesis: every complemented variable that occurs in a
/// term is negated once before the term gates and restored once after.
pub fn synth_fprm(e: &RmExpansion) -> Result<Circuit> {
    let n = crate::rm::Expansion::vars(e);
    let t = n;
    let mut c = Circuit::new(n + 1)?;
    let boundary = e.used_vars() & e.polarity().bits();
    let negations: Vec<usize> = (0..n).filter(|k| boundary >> k & 1 == 1).collect();
    for &k in &negations {
        c.push_unchecked(not_gate(k));
    }
    for m in e.synthesis_order() {
        c.push_unchecked(term_gate(m, t));
    }
    for &k in &negations {
        c.push_unchecked(not_gate(k));
    }
    Ok(c)
}

/// Mixed-polarity synthesis: terms in input order, each gate sandwiched by
/// NOT pairs on its complemented literals.
pub fn synth_mixed(e: &MixedExpansion) -> Result<Circuit> {
    let n = crate::rm::Expansion::vars(e);
    let t = n;
    let mut c = Circuit::new(n + 1)?;
    for term in e.terms() {
        let negated: Vec<usize> = (0..n)
            .filter(|k| term.complemented() >> k & 1 == 1)
            .collect();
        for &k in &negated {
            c.push_unchecked(not_gate(k));
        }
        c.push_unchecked(term_gate(term.presence(), t));
        for &k in &negated {
            c.push_unchecked(not_gate(k));
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CostModel {
    /// `m + 2K`
    Fixed,
    /// `m + 2L`
    Mixed,
}

/// Gate-count cost of an expansion.
///
/// For fixed polarity `k` counts complemented variables that occur in at
/// least one term; complemented variables absent from every term need no
/// boundary NOTs. `k_declared` is the polarity's full complemented count,
/// which equals `k` whenever every variable is used. For mixed polarity
/// `l` counts complemented-literal occurrences and both `k` fields are 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostReport {
    pub model: CostModel,
    pub m: usize,
    pub k: usize,
    pub k_declared: usize,
    pub l: usize,
    pub total: usize,
}

pub fn cost_fixed(e: &RmExpansion) -> CostReport {
    let m = e.len();
    let p = e.polarity().bits();
    let k = (e.used_vars() & p).count_ones() as usize;
    CostReport {
        model: CostModel::Fixed,
        m,
        k,
        k_declared: p.count_ones() as usize,
        l: 0,
        total: m + 2 * k,
    }
}

pub fn cost_mixed(e: &MixedExpansion) -> CostReport {
    let m = e.len();
    let l = e.complemented_occurrences();
    CostReport {
        model: CostModel::Mixed,
        m,
        k: 0,
        k_declared: 0,
        l,
        total: m + 2 * l,
    }
}

/// Removes NOT pairs on the same qubit that have no gate touching that
/// qubit between them. The result simulates identically and is a fixpoint
/// of the pass.
pub fn peephole_cancel(c: &Circuit) -> Circuit {
    let mut out: Vec<Gate> = Vec::with_capacity(c.len());
    for &g in c.gates() {
        if g.is_not() {
            let q = g.target;
            if let Some(pos) = out.iter().rposition(|h| h.touches(q)) {
                if out[pos] == g {
                    out.remove(pos);
                    continue;
                }
            }
        }
        out.push(g);
    }
    Circuit {
        width: c.width,
        gates: out,
    }
}
