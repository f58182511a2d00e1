//! Reed-Muller synthesis of single-output Boolean functions into circuits
//! of multi-controlled-NOT gates.
//!
//! The pipeline is: a [`BooleanFunction`] is expanded into an XOR of AND
//! products ([`rm`]), each product becomes one gate on a dedicated target
//! qubit ([`synth`]), and the circuit is checked against the truth table by
//! exhaustive simulation ([`verify`]). [`opt`] searches all fixed
//! polarities for the cheapest circuit.
//!
//! ```
//! use rmsynth::{pprm_transform, synth_pprm, verify_circuit, BooleanFunction};
//!
//! // f = ~x0 + x1 x2
//! let f = BooleanFunction::from_minterms(3, &[0, 2, 4, 6, 7]).unwrap();
//! let e = pprm_transform(&f);
//! assert_eq!(e.to_string(), "x0*x1*x2 ^ x0 ^ 1");
//! let c = synth_pprm(&e).unwrap();
//! assert_eq!(c.len(), 3);
//! assert!(verify_circuit(&c, &f).unwrap().passed);
//! ```

pub mod bits;
pub mod boolfn;
pub mod error;
pub mod opt;
pub mod par;
pub mod rm;
pub mod synth;
pub mod verify;

pub use boolfn::{Assignment, BooleanFunction, MAX_VARS, MIN_VARS};
pub use error::{Error, Result};
pub use opt::{
    best_circuit, best_circuit_with, sweep_fixed, sweep_fixed_with, SweepConfig, SweepReport,
    SweepRow, DEFAULT_SWEEP_LIMIT,
};
pub use par::Execution;
pub use rm::{
    evaluate_expansion, expansion_to_function, fprm_transform, parse_expression, phi_to_pi,
    pi_to_phi, pprm_transform, substitute_and_simplify, Expansion, MixedExpansion, MixedTerm,
    Polarity, RmExpansion,
};
pub use synth::{
    cost_fixed, cost_mixed, parse_gate_list, peephole_cancel, synth_fprm, synth_mixed,
    synth_pprm, to_gate_list, to_qasm, Circuit, CostModel, CostReport, Gate,
};
pub use verify::{
    apply_gate, run_circuit, verify_circuit, verify_circuit_reference, verify_circuit_with,
    BasisState, Counterexample, VerifyReport,
};
