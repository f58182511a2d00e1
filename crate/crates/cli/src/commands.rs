use std::fs;
use std::path::PathBuf;

use rmsynth::{
    fprm_transform, parse_expression, peephole_cancel, run_circuit, synth_fprm, synth_mixed,
    synth_pprm, to_gate_list, to_qasm, verify_circuit, BasisState, Circuit, Expansion,
    SweepConfig,
};

use crate::{input, CircuitFormat, CliError, Command, ReportFormat};

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Transform {
            function,
            polarity,
            output,
        } => {
            let f = input::require_function(&function)?;
            let p = input::polarity(&polarity, f.vars())?;
            let e = fprm_transform(&f, p)?;
            emit(&output, &format!("{e}\n"))
        }

        Command::Synth {
            function,
            polarity,
            mixed,
            peephole,
            format,
            output,
        } => {
            let f = input::function(&function)?;
            let (circuit, reference) = match (mixed, f) {
                (Some(expr), f) => {
                    let e = parse_expression(&expr, f.as_ref().map(|f| f.vars()))?;
                    let reference = f.unwrap_or_else(|| e.to_function());
                    (synth_mixed(&e)?, reference)
                }
                (None, Some(f)) => {
                    let p = input::polarity(polarity.as_deref().unwrap_or("0"), f.vars())?;
                    let e = fprm_transform(&f, p)?;
                    let c = if p.is_positive() {
                        synth_pprm(&e)?
                    } else {
                        synth_fprm(&e)?
                    };
                    (c, f)
                }
                (None, None) => {
                    return Err(CliError::Usage(
                        "synth needs a function (--input/--function) or --mixed".into(),
                    ))
                }
            };
            let circuit = if peephole {
                peephole_cancel(&circuit)
            } else {
                circuit
            };
            let report = verify_circuit(&circuit, &reference)?;
            if !report.passed {
                return Err(CliError::Failed(format!(
                    "synthesized circuit does not implement the function ({} counterexamples); refusing to emit",
                    report.counterexamples.len()
                )));
            }
            let text = match format {
                CircuitFormat::Gatelist => to_gate_list(&circuit),
                CircuitFormat::Qasm => to_qasm(&circuit),
            };
            emit(&output, &text)
        }

        Command::Sweep {
            function,
            limit,
            output,
        } => {
            let f = input::require_function(&function)?;
            let config = SweepConfig {
                limit,
                ..Default::default()
            };
            let report = rmsynth::sweep_fixed_with(&f, &config)?;
            emit(&output, &report.to_csv())
        }

        Command::Verify {
            circuit,
            function,
            format,
            output,
        } => {
            let c = input::circuit(&circuit)?;
            let f = input::require_function(&function)?;
            let report = verify_circuit(&c, &f)?;
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => report.to_json() + "\n",
            };
            emit(&output, &text)?;
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "verification failed on {} inputs",
                    report.counterexamples.len()
                )))
            }
        }

        Command::Simulate {
            circuit,
            bits,
            output,
        } => {
            let c = input::circuit(&circuit)?;
            let state = parse_bits(&bits, &c)?;
            let out = run_circuit(&c, state)?;
            emit(&output, &format!("{out}\n"))
        }
    }
}

fn parse_bits(args: &[String], c: &Circuit) -> Result<BasisState, CliError> {
    let values = args
        .iter()
        .flat_map(|a| a.chars())
        .filter(|ch| !ch.is_whitespace() && *ch != ',')
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(CliError::Usage(format!("invalid qubit value {other:?}"))),
        })
        .collect::<Result<Vec<bool>, _>>()?;
    if values.len() != c.width() {
        return Err(CliError::Usage(format!(
            "circuit has {} qubits, got {} input bits",
            c.width(),
            values.len()
        )));
    }
    Ok(BasisState::from_qubits(&values)?)
}
