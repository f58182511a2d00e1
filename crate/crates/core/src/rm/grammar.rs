//! Text form of expansions.
//!
//! ```text
//! expression := term ('^' term)*  |  '0'
//! term       := '1' | literal ('*'? literal)*
//! literal    := '~'? 'x' <decimal index>
//! ```
//!
//! Whitespace is insignificant. `0` stands for the empty expansion.

use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use crate::boolfn::{check_vars, MAX_VARS};
use crate::error::{Error, Result};

use super::{MixedExpansion, MixedTerm};

pub(super) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[MixedTerm]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(" ^ ")?;
        }
        if t.presence() == 0 {
            f.write_str("1")?;
            continue;
        }
        let mut first = true;
        for k in (0..32).filter(|k| t.presence() >> k & 1 == 1) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if t.complemented() >> k & 1 == 1 {
                f.write_str("~")?;
            }
            write!(f, "x{k}")?;
        }
    }
    Ok(())
}

struct Lexer<'a> {
    chars: Peekable<CharIndices<'a>>,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    /// Next non-whitespace character with its 1-based column.
    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().map(|&(i, c)| (i + 1, c))
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.next().map(|(i, c)| (i + 1, c))
    }

    fn index(&mut self, col: usize) -> Result<usize> {
        let mut digits = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        if digits.is_empty() {
            return Err(Error::parse(1, col, "expected variable index after 'x'"));
        }
        let k: usize = digits
            .parse()
            .map_err(|_| Error::parse(1, col, format!("variable index {digits} too large")))?;
        if k >= MAX_VARS {
            return Err(Error::Limit {
                what: "variable index",
                value: k,
                min: 0,
                max: MAX_VARS - 1,
            });
        }
        Ok(k)
    }
}

/// Parses an expression. With `n` given, every variable index must be below
/// it; otherwise the variable count is one past the largest index used.
///
/// Within a term `x*x` collapses to `x`, and a term containing both `x` and
/// `~x` is identically zero and dropped. Equal terms cancel pairwise.
pub fn parse_expression(text: &str, n: Option<usize>) -> Result<MixedExpansion> {
    let mut lx = Lexer {
        chars: text.char_indices().peekable(),
    };
    let mut terms: Vec<MixedTerm> = Vec::new();
    let mut max_var: Option<usize> = None;

    match lx.peek() {
        None => return Err(Error::parse(1, 1, "empty expression")),
        Some((_, '0')) => {
            lx.bump();
            if let Some((col, c)) = lx.peek() {
                return Err(Error::parse(1, col, format!("unexpected {c:?} after '0'")));
            }
            let n = n.unwrap_or(1);
            return MixedExpansion::new(n, []);
        }
        _ => {}
    }

    loop {
        let mut presence = 0u32;
        let mut complemented = 0u32;
        let mut zero = false;
        match lx.peek() {
            Some((_, '1')) => {
                lx.bump();
            }
            Some((_, '~' | 'x')) => loop {
                let (col, c) = lx.bump().expect("peeked");
                let negated = c == '~';
                if negated {
                    match lx.bump() {
                        Some((_, 'x')) => {}
                        Some((col, c)) => {
                            return Err(Error::parse(1, col, format!("expected 'x', got {c:?}")))
                        }
                        None => return Err(Error::parse(1, col + 1, "expected 'x' after '~'")),
                    }
                }
                let k = lx.index(col)?;
                if let Some(limit) = n {
                    if k >= limit {
                        return Err(Error::Range {
                            what: "variable index",
                            index: k as u64,
                            bound: limit as u64,
                        });
                    }
                }
                max_var = max_var.max(Some(k));
                let bit = 1u32 << k;
                if presence & bit != 0 && (complemented & bit != 0) != negated {
                    zero = true;
                }
                presence |= bit;
                if negated {
                    complemented |= bit;
                }
                match lx.peek() {
                    Some((_, '*')) => {
                        lx.bump();
                        match lx.peek() {
                            Some((_, '~' | 'x')) => {}
                            Some((col, c)) => {
                                return Err(Error::parse(
                                    1,
                                    col,
                                    format!("expected literal after '*', got {c:?}"),
                                ))
                            }
                            None => {
                                return Err(Error::parse(
                                    1,
                                    text.len() + 1,
                                    "expected literal after '*'",
                                ))
                            }
                        }
                    }
                    Some((_, '~' | 'x')) => {}
                    _ => break,
                }
            },
            Some((col, c)) => {
                return Err(Error::parse(1, col, format!("expected term, got {c:?}")));
            }
            None => return Err(Error::parse(1, text.len() + 1, "expected term")),
        }
        if !zero {
            terms.push(MixedTerm::new(presence, complemented)?);
        }
        match lx.bump() {
            None => break,
            Some((_, '^')) => continue,
            Some((col, c)) => {
                return Err(Error::parse(1, col, format!("expected '^', got {c:?}")));
            }
        }
    }

    let n = match n {
        Some(n) => n,
        None => max_var.map_or(1, |k| k + 1),
    };
    check_vars(n)?;
    MixedExpansion::new(n, terms)
}
