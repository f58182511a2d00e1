//! Exhaustive fixed-polarity search under the gate-count cost `m + 2K`.
//!
//! The classical optimum (fewest terms) and the circuit optimum (fewest
//! gates) can land on different polarities; both are reported.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::par::{map_indices, Execution};
use crate::rm::{fprm_coefficients, fprm_transform, Polarity};
use crate::synth::{synth_fprm, Circuit};
use crate::verify::verify_circuit_with;

pub const DEFAULT_SWEEP_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest variable count accepted.
    pub limit: usize,
    pub execution: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            limit: DEFAULT_SWEEP_LIMIT,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub polarity: u32,
    pub m: usize,
    pub k: usize,
    pub s1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    n: usize,
    rows: Vec<SweepRow>,
    best_quantum: u32,
    best_classical: u32,
}

impl SweepReport {
    pub fn vars(&self) -> usize {
        self.n
    }

    /// One row per polarity, ascending.
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn row(&self, polarity: u32) -> Option<&SweepRow> {
        self.rows.get(polarity as usize)
    }

    /// Lowest polarity minimising `s1`.
    pub fn best_quantum(&self) -> &SweepRow {
        &self.rows[self.best_quantum as usize]
    }

    /// Lowest polarity minimising `m`.
    pub fn best_classical(&self) -> &SweepRow {
        &self.rows[self.best_classical as usize]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("polarity,m,K,s1\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", r.polarity, r.m, r.k, r.s1);
        }
        let _ = writeln!(out, "# best_quantum={}", self.best_quantum);
        let _ = writeln!(out, "# best_classical={}", self.best_classical);
        out
    }
}

fn sweep_row(f: &BooleanFunction, polarity: u32) -> SweepRow {
    let coeffs = fprm_coefficients(f, polarity);
    let m = coeffs.count_ones();
    let k = (0..f.vars())
        .filter(|&v| polarity >> v & 1 == 1 && coeffs.any_with_var(v))
        .count();
    SweepRow {
        polarity,
        m,
        k,
        s1: m + 2 * k,
    }
}

fn check_limit(f: &BooleanFunction, config: &SweepConfig) -> Result<()> {
    if f.vars() > config.limit {
        return Err(Error::Limit {
            what: "sweep variable count",
            value: f.vars(),
            min: 1,
            max: config.limit,
        });
    }
    Ok(())
}

pub fn sweep_fixed(f: &BooleanFunction) -> Result<SweepReport> {
    sweep_fixed_with(f, &SweepConfig::default())
}

pub fn sweep_fixed_with(f: &BooleanFunction, config: &SweepConfig) -> Result<SweepReport> {
    check_limit(f, config)?;
    let n = f.vars();
    let rows = map_indices(config.execution, 1 << n, |p| sweep_row(f, p as u32));
    // min_by_key keeps the first minimum, i.e. the lowest polarity
    let best_quantum = rows.iter().min_by_key(|r| r.s1).expect("2^n >= 2 rows").polarity;
    let best_classical = rows.iter().min_by_key(|r| r.m).expect("2^n >= 2 rows").polarity;
    Ok(SweepReport {
        n,
        rows,
        best_quantum,
        best_classical,
    })
}

/// Sweeps, synthesizes the best polarity and verifies the result.
pub fn best_circuit(f: &BooleanFunction) -> Result<(Circuit, SweepReport)> {
    best_circuit_with(f, &SweepConfig::default())
}

pub fn best_circuit_with(
    f: &BooleanFunction,
    config: &SweepConfig,
) -> Result<(Circuit, SweepReport)> {
    let report = sweep_fixed_with(f, config)?;
    let best = *report.best_quantum();
    let polarity = Polarity::new(f.vars(), best.polarity)?;
    let circuit = synth_fprm(&fprm_transform(f, polarity)?)?;
    let check = verify_circuit_with(&circuit, f, config.execution)?;
    if !check.passed {
        return Err(Error::Consistency(format!(
            "circuit for polarity {} fails on {} inputs",
            best.polarity,
            check.counterexamples.len()
        )));
    }
    if circuit.len() != best.s1 {
        return Err(Error::Consistency(format!(
            "circuit for polarity {} has {} gates, cost model says {}",
            best.polarity,
            circuit.len(),
            best.s1
        )));
    }
    Ok((circuit, report))
}
