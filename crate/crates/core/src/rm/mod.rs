//! Reed-Muller (XOR of AND) expansions.
//!
//! A fixed-polarity expansion is stored as its coefficient table: bit `j` of
//! the table is set iff the product term with literal mask `j` is present.
//! Literal `k` of a term reads `x_k` in true form when polarity bit `k` is 0
//! and in complemented form when it is 1. Mask 0 is the constant-1 term.

mod grammar;
mod transform;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::boolfn::{check_vars, Assignment, BooleanFunction};
use crate::error::{Error, Result};

pub use grammar::parse_expression;
pub use transform::{
    fprm_coefficients, fprm_transform, phi_to_pi, pi_to_phi, pprm_transform,
    substitute_and_simplify,
};

#[inline]
fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

fn check_mask(what: &'static str, mask: u32, n: usize) -> Result<()> {
    if (mask as u64) >> n != 0 {
        Err(Error::Range {
            what,
            index: mask as u64,
            bound: 1 << n,
        })
    } else {
        Ok(())
    }
}

/// Per-variable choice of true (0) or complemented (1) literal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Polarity {
    n: usize,
    bits: u32,
}

impl Polarity {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_vars(n)?;
        check_mask("polarity", bits, n)?;
        Ok(Polarity { n, bits })
    }

    pub fn positive(n: usize) -> Result<Self> {
        Polarity::new(n, 0)
    }

    /// Parses a sign string such as `++-`: one character per variable,
    /// `x_0` first, `-` for complemented and `+` for true form.
    pub fn from_signs(signs: &str) -> Result<Self> {
        let mut bits = 0u32;
        let mut n = 0usize;
        for (k, c) in signs.chars().enumerate() {
            match c {
                '+' => {}
                '-' => bits |= 1 << k.min(31),
                _ => {
                    return Err(Error::parse(
                        1,
                        k + 1,
                        format!("polarity sign must be '+' or '-', got {c:?}"),
                    ))
                }
            }
            n = k + 1;
        }
        check_vars(n)?;
        Polarity::new(n, bits)
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_positive(&self) -> bool {
        self.bits == 0
    }

    pub fn is_complemented(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }

    pub fn to_signs(&self) -> String {
        (0..self.n)
            .map(|k| if self.is_complemented(k) { '-' } else { '+' })
            .collect()
    }
}

/// Common evaluation surface of fixed- and mixed-polarity expansions.
pub trait Expansion {
    fn vars(&self) -> usize;

    /// Value at assignment index `a`, unchecked.
    fn eval_index(&self, a: u32) -> bool;

    /// Truth table obtained by evaluating every assignment.
    fn to_function(&self) -> BooleanFunction;

    fn evaluate(&self, a: Assignment) -> Result<bool> {
        if a.vars() != self.vars() {
            return Err(Error::Arity {
                expected: self.vars(),
                got: a.vars(),
            });
        }
        Ok(self.eval_index(a.bits()))
    }
}

pub fn evaluate_expansion<E: Expansion + ?Sized>(e: &E, a: Assignment) -> Result<bool> {
    e.evaluate(a)
}

pub fn expansion_to_function<E: Expansion + ?Sized>(e: &E) -> BooleanFunction {
    e.to_function()
}

/// Fixed-polarity expansion: a set of product-term masks under one polarity.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RmExpansion {
    polarity: Polarity,
    coeffs: BitTable,
}

impl RmExpansion {
    /// Builds an expansion from masks. Repeated masks cancel pairwise.
    pub fn new(polarity: Polarity, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let n = polarity.vars();
        let mut coeffs = BitTable::zeros(n);
        for m in masks {
            check_mask("term mask", m, n)?;
            coeffs.toggle(m as usize);
        }
        Ok(RmExpansion { polarity, coeffs })
    }

    pub(crate) fn from_coefficients(polarity: Polarity, coeffs: BitTable) -> Self {
        debug_assert_eq!(polarity.vars(), coeffs.vars());
        RmExpansion { polarity, coeffs }
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn coefficients(&self) -> &BitTable {
        &self.coeffs
    }

    /// Number of product terms.
    pub fn len(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn contains(&self, mask: u32) -> bool {
        (mask as u64) >> self.vars() == 0 && self.coeffs.get(mask as usize)
    }

    /// Term masks in ascending order.
    pub fn terms(&self) -> Vec<u32> {
        self.coeffs.ones_iter().map(|m| m as u32).collect()
    }

    /// Term masks by descending literal count, ties by ascending mask.
    pub fn synthesis_order(&self) -> Vec<u32> {
        let mut terms = self.terms();
        terms.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        terms
    }

    /// Variables that occur in at least one term, as a mask.
    pub fn used_vars(&self) -> u32 {
        (0..self.vars())
            .filter(|&k| self.coeffs.any_with_var(k))
            .fold(0, |acc, k| acc | 1 << k)
    }
}

impl Expansion for RmExpansion {
    fn vars(&self) -> usize {
        self.polarity.vars()
    }

    fn eval_index(&self, a: u32) -> bool {
        let lits = a ^ self.polarity.bits();
        self.coeffs
            .ones_iter()
            .filter(|&m| lits & m as u32 == m as u32)
            .count()
            % 2
            == 1
    }

    fn to_function(&self) -> BooleanFunction {
        let n = self.vars();
        let literals: Vec<BitTable> = (0..n)
            .map(|k| {
                let mut t = BitTable::variable(n, k);
                if self.polarity.is_complemented(k) {
                    t.not_assign();
                }
                t
            })
            .collect();
        let table = accumulate_products(
            n,
            self.coeffs.ones_iter().map(|m| (m as u32, 0u32)),
            |k, _| &literals[k],
        );
        BooleanFunction::from_table(table).expect("arity already validated")
    }
}

impl fmt::Debug for RmExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RmExpansion(p={}, {})", self.polarity.bits(), self)
    }
}

/// Renders the expansion in synthesis order, e.g. `~x0*x1 ^ x2 ^ 1`.
impl fmt::Display for RmExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<MixedTerm> = self
            .synthesis_order()
            .into_iter()
            .map(|m| MixedTerm {
                presence: m,
                complemented: m & self.polarity.bits(),
            })
            .collect();
        grammar::write_terms(f, &terms)
    }
}

/// One product term of a mixed-polarity expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MixedTerm {
    presence: u32,
    complemented: u32,
}

impl MixedTerm {
    pub fn new(presence: u32, complemented: u32) -> Result<Self> {
        if complemented & !presence != 0 {
            return Err(Error::Range {
                what: "complement mask outside presence mask",
                index: complemented as u64,
                bound: presence as u64 + 1,
            });
        }
        Ok(MixedTerm {
            presence,
            complemented,
        })
    }

    pub const fn constant_one() -> Self {
        MixedTerm {
            presence: 0,
            complemented: 0,
        }
    }

    pub fn presence(&self) -> u32 {
        self.presence
    }

    pub fn complemented(&self) -> u32 {
        self.complemented
    }

    #[inline]
    fn fires(&self, a: u32) -> bool {
        (a ^ self.complemented) & self.presence == self.presence
    }
}

/// Expansion in which a variable may appear in both forms across terms.
/// Term order is preserved since mixed synthesis emits gates in that order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedExpansion {
    n: usize,
    terms: Vec<MixedTerm>,
}

impl MixedExpansion {
    /// Builds an expansion. Identical terms cancel pairwise; survivors keep
    /// the position of their first occurrence.
    pub fn new(n: usize, terms: impl IntoIterator<Item = MixedTerm>) -> Result<Self> {
        check_vars(n)?;
        let mut order: Vec<MixedTerm> = Vec::new();
        let mut parity: std::collections::HashMap<MixedTerm, bool> = Default::default();
        for t in terms {
            check_mask("term mask", t.presence, n)?;
            let odd = parity.entry(t).or_insert_with(|| {
                order.push(t);
                false
            });
            *odd = !*odd;
        }
        order.retain(|t| parity[t]);
        Ok(MixedExpansion { n, terms: order })
    }

    /// The sum-of-minterms form: one full-width term per on-set point.
    pub fn minterm_form(f: &BooleanFunction) -> Self {
        let n = f.vars();
        let full = full_mask(n);
        let terms = f
            .minterms()
            .into_iter()
            .map(|m| MixedTerm {
                presence: full,
                complemented: !(m as u32) & full,
            })
            .collect();
        MixedExpansion { n, terms }
    }

    pub fn terms(&self) -> &[MixedTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of complemented-literal occurrences.
    pub fn complemented_occurrences(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.complemented.count_ones() as usize)
            .sum()
    }
}

impl From<&RmExpansion> for MixedExpansion {
    fn from(e: &RmExpansion) -> Self {
        let p = e.polarity().bits();
        MixedExpansion {
            n: e.vars(),
            terms: e
                .synthesis_order()
                .into_iter()
                .map(|m| MixedTerm {
                    presence: m,
                    complemented: m & p,
                })
                .collect(),
        }
    }
}

impl Expansion for MixedExpansion {
    fn vars(&self) -> usize {
        self.n
    }

    fn eval_index(&self, a: u32) -> bool {
        self.terms.iter().filter(|t| t.fires(a)).count() % 2 == 1
    }

    fn to_function(&self) -> BooleanFunction {
        let n = self.n;
        let (pos, neg): (Vec<BitTable>, Vec<BitTable>) = (0..n)
            .map(|k| {
                let t = BitTable::variable(n, k);
                let mut c = t.clone();
                c.not_assign();
                (t, c)
            })
            .unzip();
        let table = accumulate_products(
            n,
            self.terms.iter().map(|t| (t.presence, t.complemented)),
            |k, compl| if compl { &neg[k] } else { &pos[k] },
        );
        BooleanFunction::from_table(table).expect("arity already validated")
    }
}

impl fmt::Debug for MixedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedExpansion(n={}, {})", self.n, self)
    }
}

impl fmt::Display for MixedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        grammar::write_terms(f, &self.terms)
    }
}

/// XOR over terms of the AND of their literal tables.
fn accumulate_products<'a>(
    n: usize,
    terms: impl Iterator<Item = (u32, u32)>,
    literal: impl Fn(usize, bool) -> &'a BitTable,
) -> BitTable {
    let mut acc = BitTable::zeros(n);
    let ones = BitTable::ones(n);
    let mut product = BitTable::zeros(n);
    for (presence, complemented) in terms {
        product.clone_from(&ones);
        for k in (0..n).filter(|k| presence >> k & 1 == 1) {
            product.and_assign(literal(k, complemented >> k & 1 == 1));
        }
        acc.xor_assign(&product);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed_example() -> MixedExpansion {
        parse_expression("~x0*x1*x2 ^ x0*~x1 ^ x0 ^ ~x2 ^ 1", Some(3))
            .unwrap()
    }

    #[test]
    fn polarity_signs() {
        let p = Polarity::from_signs("++-").unwrap();
        assert_eq!(p.bits(), 4);
        assert_eq!(p.vars(), 3);
        assert_eq!(p.to_signs(), "++-");
        assert!(Polarity::from_signs("+*").is_err());
        assert!(Polarity::from_signs("").is_err());
        assert!(Polarity::new(3, 8).is_err());
        assert!(Polarity::positive(3).unwrap().is_positive());
    }

    #[test]
    fn rm_expansion_set_semantics() {
        let p = Polarity::positive(3).unwrap();
        let e = RmExpansion::new(p, [7, 1, 0, 1, 1]).unwrap();
        assert_eq!(e.terms(), vec![0, 1, 7]);
        assert_eq!(e.synthesis_order(), vec![7, 1, 0]);
        assert!(RmExpansion::new(p, [8]).is_err());
        assert!(RmExpansion::new(p, []).unwrap().is_empty());
    }

    #[test]
    fn evaluate_expansion_examples() {
        // f = ~x0 + x1 x2 at polarity 5
        let p = Polarity::new(3, 5).unwrap();
        let e = RmExpansion::new(p, [7, 6, 3, 2, 1]).unwrap();
        let a = Assignment::new(3, 0b111).unwrap();
        assert!(evaluate_expansion(&e, a).unwrap());

        let empty = RmExpansion::new(Polarity::positive(2).unwrap(), []).unwrap();
        for a in 0..4 {
            assert!(!evaluate_expansion(&empty, Assignment::new(2, a).unwrap()).unwrap());
        }

        let m = mixed_example();
        assert!(!evaluate_expansion(&m, Assignment::new(3, 0).unwrap()).unwrap());
        assert!(matches!(
            evaluate_expansion(&m, Assignment::new(2, 0).unwrap()),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn expansion_to_function_examples() {
        let e = RmExpansion::new(Polarity::positive(3).unwrap(), [1, 4, 0]).unwrap();
        assert_eq!(expansion_to_function(&e).to_table_hex(), "A5");
        let e = RmExpansion::new(Polarity::positive(2).unwrap(), []).unwrap();
        assert_eq!(expansion_to_function(&e).to_table_hex(), "0");
    }

    #[test]
    fn table_evaluation_matches_pointwise() {
        let m = mixed_example();
        let f = m.to_function();
        for a in 0..8 {
            assert_eq!(f.value(a as usize), m.eval_index(a));
        }
        let e = RmExpansion::new(Polarity::new(3, 5).unwrap(), [7, 6, 3, 2, 1]).unwrap();
        let f = e.to_function();
        for a in 0..8 {
            assert_eq!(f.value(a as usize), e.eval_index(a));
        }
    }

    #[test]
    fn mixed_terms_cancel_in_order() {
        let t = |p, c| MixedTerm::new(p, c).unwrap();
        let e = MixedExpansion::new(3, [t(1, 1), t(3, 0), t(1, 1), t(4, 4), t(3, 0), t(3, 0)]).unwrap();
        assert_eq!(e.terms(), &[t(3, 0), t(4, 4)]);
        assert!(MixedTerm::new(1, 2).is_err());
        assert!(MixedExpansion::new(2, [t(4, 0)]).is_err());
        assert_eq!(mixed_example().complemented_occurrences(), 3);
    }

    #[test]
    fn minterm_form_is_the_function() {
        let f = BooleanFunction::from_table_hex(3, "D5").unwrap();
        let m = MixedExpansion::minterm_form(&f);
        assert_eq!(m.len(), 5);
        assert_eq!(m.to_function(), f);
    }
}
