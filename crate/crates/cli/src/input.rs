use std::fs;
use std::path::Path;

use rmsynth::{BooleanFunction, Circuit, Polarity};

use crate::{CliError, FunctionArgs, InputFormat};

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Loads the function named by `--input` or `--function`, if any.
pub fn function(args: &FunctionArgs) -> Result<Option<BooleanFunction>, CliError> {
    let text = match (&args.input, &args.function) {
        (Some(path), None) => read_file(path)?,
        (None, Some(inline)) => inline.replace(';', "\n"),
        (None, None) => return Ok(None),
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("give either --input or --function, not both".into()))
        }
    };
    let format = match args.input_format {
        InputFormat::Auto => detect(&text),
        other => other,
    };
    let f = match format {
        InputFormat::Pla => BooleanFunction::parse_pla(&text),
        InputFormat::Hex => BooleanFunction::parse_hex_text(&text),
        InputFormat::Minterms | InputFormat::Auto => BooleanFunction::parse_minterm_text(&text),
    }?;
    Ok(Some(f))
}

pub fn require_function(args: &FunctionArgs) -> Result<BooleanFunction, CliError> {
    function(args)?.ok_or_else(|| CliError::Usage("a function is required (--input or --function)".into()))
}

fn detect(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('.') => InputFormat::Pla,
        _ => InputFormat::Minterms,
    }
}

/// Accepts a decimal polarity number or a sign string such as `++-`.
pub fn polarity(text: &str, n: usize) -> Result<Polarity, CliError> {
    let text = text.trim();
    if !text.is_empty() && text.chars().all(|c| c.is_ascii_digit()) {
        let bits: u32 = text
            .parse()
            .map_err(|_| CliError::Usage(format!("polarity {text} is too large")))?;
        return Ok(Polarity::new(n, bits)?);
    }
    let p = Polarity::from_signs(text)?;
    if p.vars() != n {
        return Err(CliError::Usage(format!(
            "polarity string {text:?} has {} signs, function has {n} variables",
            p.vars()
        )));
    }
    Ok(p)
}

pub fn circuit(path: &Path) -> Result<Circuit, CliError> {
    Ok(rmsynth::parse_gate_list(&read_file(path)?)?)
}
