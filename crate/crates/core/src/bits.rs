//! Word-packed truth tables over `n` variables.
//!
//! A [`BitTable`] holds `2^n` bits; bit `a` lives in word `a / 64` at
//! position `a % 64`. Tables with `n < 6` occupy the low `2^n` bits of a
//! single word and the remaining bits are kept at zero.

use serde::{Deserialize, Serialize};

/// Per-variable masks selecting the positions inside a word where variable
/// `k` (for `k < 6`) is 0.
pub(crate) const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitTable {
    vars: usize,
    words: Vec<u64>,
}

impl BitTable {
    pub fn zeros(vars: usize) -> Self {
        let words = vec![0; word_count(vars)];
        BitTable { vars, words }
    }

    pub fn ones(vars: usize) -> Self {
        let mut t = BitTable {
            vars,
            words: vec![u64::MAX; word_count(vars)],
        };
        t.trim();
        t
    }

    /// The table of the projection `a -> a_k`.
    pub fn variable(vars: usize, k: usize) -> Self {
        debug_assert!(k < vars);
        let mut t = BitTable::zeros(vars);
        for (w, word) in t.words.iter_mut().enumerate() {
            *word = variable_word(k, w);
        }
        t.trim();
        t
    }

    #[inline]
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Number of bits, `2^vars`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.vars
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        (self.words[index >> 6] >> (index & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        let bit = 1u64 << (index & 63);
        if value {
            self.words[index >> 6] |= bit;
        } else {
            self.words[index >> 6] &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, index: usize) {
        self.words[index >> 6] ^= 1u64 << (index & 63);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits in ascending order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some((w << 6) | bit)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.vars, other.vars);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.vars, other.vars);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn not_assign(&mut self) {
        for w in &mut self.words {
            *w = !*w;
        }
        self.trim();
    }

    /// Whether any set bit has variable `k` equal to 1.
    pub fn any_with_var(&self, k: usize) -> bool {
        self.words
            .iter()
            .enumerate()
            .any(|(w, &word)| word & variable_word(k, w) != 0)
    }

    /// In-place subset-XOR (Möbius) transform over GF(2): afterwards bit `j`
    /// holds the XOR of the original bits `i` with `i ⊆ j`. The transform is
    /// an involution.
    pub fn moebius(&mut self) {
        for (k, &low) in LOW_HALF.iter().enumerate().take(self.vars) {
            let shift = 1 << k;
            for w in &mut self.words {
                *w ^= (*w & low) << shift;
            }
        }
        for k in 6..self.vars {
            let stride = 1 << (k - 6);
            for w in 0..self.words.len() {
                if w & stride != 0 {
                    self.words[w] ^= self.words[w ^ stride];
                }
            }
        }
    }

    /// Reindexes the table so that bit `a` of the result is bit `a ^ flip`
    /// of `self`.
    pub fn flip_inputs(&mut self, flip: usize) {
        for (k, &low) in LOW_HALF.iter().enumerate().take(self.vars) {
            if flip >> k & 1 == 1 {
                let shift = 1 << k;
                for w in &mut self.words {
                    *w = ((*w & low) << shift) | ((*w >> shift) & low);
                }
            }
        }
        for k in 6..self.vars {
            if flip >> k & 1 == 1 {
                let stride = 1 << (k - 6);
                for w in 0..self.words.len() {
                    if w & stride == 0 {
                        self.words.swap(w, w | stride);
                    }
                }
            }
        }
    }

    fn trim(&mut self) {
        if self.vars < 6 {
            self.words[0] &= (1u64 << (1 << self.vars)) - 1;
        }
    }
}

impl std::fmt::Debug for BitTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitTable({} vars: ", self.vars)?;
        for w in self.words.iter().rev() {
            write!(f, "{w:016x}")?;
        }
        write!(f, ")")
    }
}

#[inline]
pub(crate) fn word_count(vars: usize) -> usize {
    if vars <= 6 {
        1
    } else {
        1 << (vars - 6)
    }
}

/// Word `w` of the projection table for variable `k`, untrimmed.
#[inline]
pub(crate) fn variable_word(k: usize, w: usize) -> u64 {
    if k < 6 {
        !LOW_HALF[k]
    } else if w >> (k - 6) & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_moebius(bits: &[bool]) -> Vec<bool> {
        (0..bits.len())
            .map(|j| {
                (0..bits.len())
                    .filter(|&i| i & j == i)
                    .fold(false, |acc, i| acc ^ bits[i])
            })
            .collect()
    }

    fn table_from(vars: usize, bits: &[bool]) -> BitTable {
        let mut t = BitTable::zeros(vars);
        for (i, &b) in bits.iter().enumerate() {
            t.set(i, b);
        }
        t
    }

    #[test]
    fn moebius_matches_naive_subset_xor() {
        for vars in [1usize, 3, 6, 7, 9] {
            let bits: Vec<bool> = (0..1usize << vars)
                .map(|i| ((i * 2654435761usize) >> 7) & 1 == 1)
                .collect();
            let mut t = table_from(vars, &bits);
            t.moebius();
            assert_eq!(t, table_from(vars, &naive_moebius(&bits)), "vars={vars}");
            t.moebius();
            assert_eq!(t, table_from(vars, &bits));
        }
    }

    #[test]
    fn flip_inputs_reindexes() {
        for vars in [2usize, 5, 8] {
            let bits: Vec<bool> = (0..1usize << vars).map(|i| i % 3 == 0 || i % 7 == 1).collect();
            for flip in [0usize, 1, 2, (1 << vars) - 1, 0b1010_0110 & ((1 << vars) - 1)] {
                let mut t = table_from(vars, &bits);
                t.flip_inputs(flip);
                for a in 0..1usize << vars {
                    assert_eq!(t.get(a), bits[a ^ flip]);
                }
            }
        }
    }

    #[test]
    fn variable_tables() {
        for vars in [1usize, 4, 6, 8] {
            for k in 0..vars {
                let t = BitTable::variable(vars, k);
                for a in 0..1usize << vars {
                    assert_eq!(t.get(a), a >> k & 1 == 1);
                }
            }
        }
    }

    #[test]
    fn ones_iter_and_trim() {
        let mut t = BitTable::ones(2);
        assert_eq!(t.words(), &[0xF]);
        t.not_assign();
        assert!(t.is_empty());
        let mut t = BitTable::zeros(8);
        t.set(3, true);
        t.set(200, true);
        assert_eq!(t.ones_iter().collect::<Vec<_>>(), vec![3, 200]);
        assert!(t.any_with_var(7));
        assert!(!t.any_with_var(2));
    }
}
