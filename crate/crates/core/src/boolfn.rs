//! Single-output Boolean functions stored as truth tables.
//!
//! Variable `x_k` is bit `k` of an assignment index, so `x_0` toggles
//! fastest. The same convention is used for minterm indices, product-term
//! masks and polarity numbers throughout the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::error::{Error, Result};

pub const MIN_VARS: usize = 1;
pub const MAX_VARS: usize = 16;

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if (MIN_VARS..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::Limit {
            what: "variable count",
            value: n,
            min: MIN_VARS,
            max: MAX_VARS,
        })
    }
}

/// Values of `x_0..x_{n-1}` packed with `x_k` at bit `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Assignment {
    n: usize,
    bits: u32,
}

impl Assignment {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_vars(n)?;
        if (bits as u64) >> n != 0 {
            return Err(Error::Range {
                what: "assignment",
                index: bits as u64,
                bound: 1 << n,
            });
        }
        Ok(Assignment { n, bits })
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn value(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }
}

/// Truth table of a function `f: {0,1}^n -> {0,1}`, `1 <= n <= 16`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BooleanFunction {
    table: BitTable,
}

impl BooleanFunction {
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_vars(n)?;
        let table = if value {
            BitTable::ones(n)
        } else {
            BitTable::zeros(n)
        };
        Ok(BooleanFunction { table })
    }

    pub fn from_table(table: BitTable) -> Result<Self> {
        check_vars(table.vars())?;
        Ok(BooleanFunction { table })
    }

    /// Builds `f` whose on-set is exactly the listed minterms. Duplicates
    /// are idempotent.
    pub fn from_minterms(n: usize, minterms: &[u64]) -> Result<Self> {
        check_vars(n)?;
        let mut table = BitTable::zeros(n);
        for &m in minterms {
            if m >> n != 0 {
                return Err(Error::Range {
                    what: "minterm",
                    index: m,
                    bound: 1 << n,
                });
            }
            table.set(m as usize, true);
        }
        Ok(BooleanFunction { table })
    }

    /// Parses a hex truth table. The string is read as one hexadecimal
    /// number whose bit `a` is `f(a)`, so the last character carries
    /// `f(0)..f(3)`. Exactly `ceil(2^n / 4)` digits are required.
    pub fn from_table_hex(n: usize, hex: &str) -> Result<Self> {
        check_vars(n)?;
        let digits = (1usize << n).div_ceil(4);
        let chars: Vec<char> = hex.chars().collect();
        if chars.len() != digits {
            return Err(Error::parse(
                1,
                chars.len().min(digits) + 1,
                format!("expected {digits} hex digits for n={n}, got {}", chars.len()),
            ));
        }
        let mut table = BitTable::zeros(n);
        for (pos, c) in chars.iter().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::parse(1, pos + 1, format!("invalid hex digit {c:?}")))?;
            let base = (digits - 1 - pos) * 4;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let index = base + b;
                    if index >> n != 0 {
                        return Err(Error::parse(
                            1,
                            pos + 1,
                            format!("hex digit {c:?} sets bits beyond 2^{n}"),
                        ));
                    }
                    table.set(index, true);
                }
            }
        }
        Ok(BooleanFunction { table })
    }

    pub fn vars(&self) -> usize {
        self.table.vars()
    }

    pub fn table(&self) -> &BitTable {
        &self.table
    }

    pub fn evaluate(&self, a: Assignment) -> Result<bool> {
        if a.vars() != self.vars() {
            return Err(Error::Arity {
                expected: self.vars(),
                got: a.vars(),
            });
        }
        Ok(self.table.get(a.bits() as usize))
    }

    /// Unchecked point evaluation at assignment index `a`.
    #[inline]
    pub fn value(&self, a: usize) -> bool {
        self.table.get(a)
    }

    pub fn minterms(&self) -> Vec<u64> {
        self.table.ones_iter().map(|i| i as u64).collect()
    }

    pub fn to_table_hex(&self) -> String {
        let n = self.vars();
        let digits = (1usize << n).div_ceil(4);
        (0..digits)
            .rev()
            .map(|d| {
                let nibble = (0..4)
                    .filter(|b| {
                        let i = d * 4 + b;
                        i >> n == 0 && self.table.get(i)
                    })
                    .fold(0u32, |acc, b| acc | 1 << b);
                char::from_digit(nibble, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.vars() != other.vars() {
            return Err(Error::Arity {
                expected: self.vars(),
                got: other.vars(),
            });
        }
        let mut table = self.table.clone();
        table.xor_assign(&other.table);
        Ok(BooleanFunction { table })
    }

    /// Minterm-list text: `n=<int>` on the first line, indices on the second.
    pub fn parse_minterm_text(text: &str) -> Result<Self> {
        let (n, body, _) = split_header(text)?;
        let mut minterms = Vec::new();
        for (lineno, line) in body {
            for (col, tok) in tokens(line) {
                let m: u64 = tok.parse().map_err(|_| {
                    Error::parse(lineno, col, format!("invalid minterm index {tok:?}"))
                })?;
                minterms.push(m);
            }
        }
        BooleanFunction::from_minterms(n, &minterms)
    }

    pub fn to_minterm_text(&self) -> String {
        let list: Vec<String> = self.minterms().iter().map(u64::to_string).collect();
        format!("n={}\n{}\n", self.vars(), list.join(" "))
    }

    /// Hex text: `n=<int>` on the first line, the hex table on the second.
    pub fn parse_hex_text(text: &str) -> Result<Self> {
        let (n, body, body_line) = split_header(text)?;
        let mut hex = String::new();
        for (_, line) in body {
            hex.extend(line.chars().filter(|c| !c.is_whitespace()));
        }
        BooleanFunction::from_table_hex(n, &hex).map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: body_line,
                column,
                message,
            },
            other => other,
        })
    }

    pub fn to_hex_text(&self) -> String {
        format!("n={}\n{}\n", self.vars(), self.to_table_hex())
    }

    /// Parses the single-output PLA subset: `.i`, `.o 1`, optional `.p`,
    /// cube lines over `{0,1,-}` with the leftmost character for `x_0`, and
    /// `.e`. Cubes with output 1 are OR-ed together.
    pub fn parse_pla(text: &str) -> Result<Self> {
        let mut inputs: Option<usize> = None;
        let mut outputs_seen = false;
        let mut table: Option<BitTable> = None;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(directive) = line.strip_prefix('.') {
                let mut parts = directive.split_whitespace();
                let key = parts.next().unwrap_or("");
                let arg = parts.next();
                match key {
                    "i" => {
                        let n = parse_count(arg, lineno, ".i")?;
                        check_vars(n)?;
                        inputs = Some(n);
                        table = Some(BitTable::zeros(n));
                    }
                    "o" => {
                        let o = parse_count(arg, lineno, ".o")?;
                        if o != 1 {
                            return Err(Error::parse(
                                lineno,
                                1,
                                format!("only single-output PLA is supported, got .o {o}"),
                            ));
                        }
                        outputs_seen = true;
                    }
                    "p" => {
                        parse_count(arg, lineno, ".p")?;
                    }
                    "ilb" | "ob" | "type" => {}
                    "e" | "end" => break,
                    other => {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("unsupported directive .{other}"),
                        ))
                    }
                }
                continue;
            }

            let (Some(n), Some(table)) = (inputs, table.as_mut()) else {
                return Err(Error::parse(lineno, 1, "cube before .i header"));
            };
            if !outputs_seen {
                return Err(Error::parse(lineno, 1, "cube before .o header"));
            }
            let mut fields = line.split_whitespace();
            let cube = fields.next().unwrap_or("");
            let out = fields
                .next()
                .ok_or_else(|| Error::parse(lineno, cube.len() + 1, "missing output column"))?;
            if let Some(extra) = fields.next() {
                let col = raw.find(extra).map_or(0, |c| c + 1);
                return Err(Error::parse(lineno, col, "unexpected extra field"));
            }
            if cube.chars().count() != n {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("cube has {} inputs, expected {n}", cube.chars().count()),
                ));
            }
            let mut care = 0usize;
            let mut value = 0usize;
            for (k, c) in cube.chars().enumerate() {
                match c {
                    '0' => care |= 1 << k,
                    '1' => {
                        care |= 1 << k;
                        value |= 1 << k;
                    }
                    '-' | '~' | 'x' | 'X' => {}
                    _ => {
                        return Err(Error::parse(
                            lineno,
                            k + 1,
                            format!("invalid cube character {c:?}"),
                        ))
                    }
                }
            }
            match out {
                "1" => {
                    let free = !care & ((1usize << n) - 1);
                    let mut sub = free;
                    loop {
                        table.set(value | sub, true);
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & free;
                    }
                }
                "0" | "-" | "~" => {}
                _ => {
                    return Err(Error::parse(
                        lineno,
                        cube.len() + 2,
                        format!("invalid output value {out:?}"),
                    ))
                }
            }
        }

        match (inputs, outputs_seen, table) {
            (Some(_), true, Some(table)) => Ok(BooleanFunction { table }),
            (None, _, _) | (_, _, None) => Err(Error::parse(0, 0, "missing .i header")),
            (_, false, _) => Err(Error::parse(0, 0, "missing .o header")),
        }
    }

    /// Writes the on-set as one full minterm cube per line.
    pub fn to_pla(&self) -> String {
        let n = self.vars();
        let minterms = self.minterms();
        let mut out = format!(".i {n}\n.o 1\n.p {}\n", minterms.len());
        for m in minterms {
            let cube: String = (0..n)
                .map(|k| if m >> k & 1 == 1 { '1' } else { '0' })
                .collect();
            out.push_str(&cube);
            out.push_str(" 1\n");
        }
        out.push_str(".e\n");
        out
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, 0x{})", self.vars(), self.to_table_hex())
    }
}

fn parse_count(arg: Option<&str>, line: usize, directive: &str) -> Result<usize> {
    let arg = arg.ok_or_else(|| Error::parse(line, 1, format!("{directive} needs an argument")))?;
    arg.parse()
        .map_err(|_| Error::parse(line, 1, format!("invalid {directive} argument {arg:?}")))
}

type Body<'a> = Vec<(usize, &'a str)>;

/// Splits `n=<int>` from the rest of the text. Returns the body lines with
/// their 1-based line numbers and the line number where the body starts.
fn split_header(text: &str) -> Result<(usize, Body<'_>, usize)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing n=<int> header"))?;
    let value = header
        .strip_prefix("n=")
        .or_else(|| header.strip_prefix("n ="))
        .ok_or_else(|| Error::parse(hline, 1, "missing n=<int> header"))?;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::parse(hline, 3, format!("invalid variable count {value:?}")))?;
    let body: Body<'_> = lines.collect();
    let body_line = body.first().map_or(hline + 1, |(l, _)| *l);
    Ok((n, body, body_line))
}

fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let col = tok.as_ptr() as usize - line.as_ptr() as usize + 1;
        (col, tok)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hex(f: &BooleanFunction) -> String {
        f.to_table_hex()
    }

    #[test]
    fn from_minterms_examples() {
        let f = BooleanFunction::from_minterms(3, &[0, 2, 4, 6, 7]).unwrap();
        assert_eq!(hex(&f), "D5");
        let f = BooleanFunction::from_minterms(2, &[]).unwrap();
        assert_eq!(hex(&f), "0");
        let f = BooleanFunction::from_minterms(3, &[0, 2, 5, 7]).unwrap();
        assert_eq!(hex(&f), "A5");
        let dup = BooleanFunction::from_minterms(3, &[7, 7, 0, 0, 2, 5, 7]).unwrap();
        assert_eq!(dup, f);
    }

    #[test]
    fn from_minterms_errors() {
        assert_eq!(
            BooleanFunction::from_minterms(3, &[1, 8]).unwrap_err(),
            Error::Range {
                what: "minterm",
                index: 8,
                bound: 8
            }
        );
        assert!(matches!(
            BooleanFunction::from_minterms(0, &[]),
            Err(Error::Limit { value: 0, .. })
        ));
        assert!(matches!(
            BooleanFunction::from_minterms(17, &[]),
            Err(Error::Limit { value: 17, .. })
        ));
    }

    #[test]
    fn from_table_hex_examples() {
        let f = BooleanFunction::from_table_hex(3, "D5").unwrap();
        assert_eq!(f, BooleanFunction::from_minterms(3, &[0, 2, 4, 6, 7]).unwrap());
        let id = BooleanFunction::from_table_hex(1, "2").unwrap();
        assert_eq!(id.minterms(), vec![1]);
        let f = BooleanFunction::from_table_hex(4, "F00F").unwrap();
        let g = BooleanFunction::from_minterms(4, &[0, 1, 2, 3, 12, 13, 14, 15]).unwrap();
        assert_eq!(f, g);
        assert_eq!(BooleanFunction::from_table_hex(3, "d5").unwrap().to_table_hex(), "D5");
    }

    #[test]
    fn from_table_hex_errors() {
        assert!(matches!(
            BooleanFunction::from_table_hex(3, "D"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            BooleanFunction::from_table_hex(4, "F0G0"),
            Err(Error::Parse { column: 3, .. })
        ));
        // n=1 uses only the low two bits of its single digit
        assert!(matches!(
            BooleanFunction::from_table_hex(1, "4"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let f = BooleanFunction::from_table_hex(3, "D5").unwrap();
        assert!(f.evaluate(Assignment::new(3, 0b110).unwrap()).unwrap());
        let zero = BooleanFunction::constant(3, false).unwrap();
        for a in 0..8 {
            assert!(!zero.evaluate(Assignment::new(3, a).unwrap()).unwrap());
        }
        let g = BooleanFunction::from_table_hex(3, "A5").unwrap();
        assert!(g.evaluate(Assignment::new(3, 0b101).unwrap()).unwrap());
        assert_eq!(
            g.evaluate(Assignment::new(2, 1).unwrap()),
            Err(Error::Arity {
                expected: 3,
                got: 2
            })
        );
        assert!(Assignment::new(3, 8).is_err());
    }

    #[test]
    fn parse_pla_examples() {
        let f = BooleanFunction::parse_pla(".i 3\n.o 1\n0-- 1\n-11 1\n.e").unwrap();
        assert_eq!(hex(&f), "D5");
        let f = BooleanFunction::parse_pla(".i 2\n.o 1\n.e").unwrap();
        assert_eq!(f, BooleanFunction::constant(2, false).unwrap());
        let f = BooleanFunction::parse_pla(".i 3\n.o 1\n--- 1\n.e").unwrap();
        assert_eq!(hex(&f), "FF");
        let f = BooleanFunction::parse_pla("# header\n.i 3\n.o 1\n.p 2\n0-- 1\n-11 1 # c\n.e\n")
            .unwrap();
        assert_eq!(hex(&f), "D5");
    }

    #[test]
    fn parse_pla_errors() {
        let err = BooleanFunction::parse_pla(".i 3\n.o 2\n0-- 11\n.e").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = BooleanFunction::parse_pla(".i 3\n.o 1\n0-2 1\n.e").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err:?}");
        let err = BooleanFunction::parse_pla(".i 3\n.o 1\n0- 1\n.e").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = BooleanFunction::parse_pla("0-- 1\n.e").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
        let err = BooleanFunction::parse_pla(".o 1\n.e").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = BooleanFunction::parse_pla(".i 3\n.o 1\n000\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn text_formats() {
        let f = BooleanFunction::parse_minterm_text("n=3\n0 2 4 6 7\n").unwrap();
        assert_eq!(hex(&f), "D5");
        assert_eq!(f.to_minterm_text(), "n=3\n0 2 4 6 7\n");
        assert_eq!(BooleanFunction::parse_minterm_text("n=2").unwrap(), BooleanFunction::constant(2, false).unwrap());
        let g = BooleanFunction::parse_hex_text("n=4\nF00F\n").unwrap();
        assert_eq!(g.to_hex_text(), "n=4\nF00F\n");
        let err = BooleanFunction::parse_minterm_text("n=3\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                message: "invalid minterm index \"x\"".into()
            }
        );
        assert!(BooleanFunction::parse_minterm_text("3\n0\n").is_err());
        assert!(BooleanFunction::parse_hex_text("n=3\nD5D\n").is_err());
    }
}
