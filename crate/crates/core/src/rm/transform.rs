use std::collections::BTreeSet;

use crate::bits::BitTable;
use crate::boolfn::{check_vars, BooleanFunction};
use crate::error::{Error, Result};

use super::{check_mask, full_mask, Expansion, MixedExpansion, Polarity, RmExpansion};

/// All bitwise supersets of `mask` within `n` variables, ascending.
fn supersets(mask: u32, n: usize) -> Vec<u32> {
    let free = !mask & full_mask(n);
    let mut out = Vec::with_capacity(1 << free.count_ones());
    let mut sub = free;
    loop {
        out.push(mask | sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    out.reverse();
    out
}

/// Expands the minterm-style product `phi_i` into positive-literal products.
/// Each complemented literal `~x_k = x_k ^ 1` doubles the product, so the
/// result is the set of supersets of `i`.
pub fn phi_to_pi(i: u32, n: usize) -> Result<Vec<u32>> {
    check_vars(n)?;
    check_mask("minterm", i, n)?;
    Ok(supersets(i, n))
}

/// Expands the positive product `pi_j` as an XOR of minterms: the minterms
/// whose assignment sets every variable of `j`.
pub fn pi_to_phi(j: u32, n: usize) -> Result<Vec<u32>> {
    check_vars(n)?;
    check_mask("term mask", j, n)?;
    Ok(supersets(j, n))
}

/// Positive-polarity expansion via the in-place GF(2) Möbius transform.
pub fn pprm_transform(f: &BooleanFunction) -> RmExpansion {
    let mut coeffs = f.table().clone();
    coeffs.moebius();
    let polarity = Polarity::positive(f.vars()).expect("function arity is valid");
    RmExpansion::from_coefficients(polarity, coeffs)
}

/// Coefficient table of the expansion of `f` at polarity `bits`: the
/// positive expansion of `a -> f(a ^ bits)`.
pub fn fprm_coefficients(f: &BooleanFunction, bits: u32) -> BitTable {
    let mut coeffs = f.table().clone();
    coeffs.flip_inputs(bits as usize);
    coeffs.moebius();
    coeffs
}

/// The unique fixed-polarity expansion of `f` at polarity `p`.
pub fn fprm_transform(f: &BooleanFunction, p: Polarity) -> Result<RmExpansion> {
    if p.vars() != f.vars() {
        return Err(Error::Arity {
            expected: f.vars(),
            got: p.vars(),
        });
    }
    Ok(RmExpansion::from_coefficients(p, fprm_coefficients(f, p.bits())))
}

/// Symbolic simplification to positive polarity: each complemented literal
/// is rewritten as `x ^ 1`, products are distributed and equal products
/// cancel in pairs.
///
/// This route never touches a truth table, which makes it a useful
/// cross-check for the transforms above.
pub fn substitute_and_simplify(e: &MixedExpansion) -> RmExpansion {
    let mut acc: BTreeSet<u32> = BTreeSet::new();
    for term in e.terms() {
        let complemented = term.complemented();
        let true_part = term.presence() & !complemented;
        // prod_{k in C} (x_k ^ 1) = XOR over subsets S of C of prod_{k in S} x_k
        let mut sub = complemented;
        loop {
            let product = true_part | sub;
            if !acc.remove(&product) {
                acc.insert(product);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & complemented;
        }
    }
    let polarity = Polarity::positive(e.vars()).expect("validated on construction");
    RmExpansion::new(polarity, acc).expect("products stay within the variable range")
}
