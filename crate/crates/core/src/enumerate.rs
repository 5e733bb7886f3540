//! Ordered enumeration of words of a fixed length, optionally restricted to
//! canonical representatives under letter renaming.
//!
//! Order is lexicographic with the hole below every letter. A canonical word
//! introduces letters in order: the first letter to appear is `a`, the next
//! new one is `b`, and so on. Prefixes of canonical words are canonical, so
//! the canonical words form a tree that can be walked by appending symbols.

use std::ops::ControlFlow;

use crate::word::{Alphabet, PartialWord, Symbol};

/// Renames letters so their first occurrences read `a, b, c, ...`.
/// Holes are left in place and the alphabet is unchanged.
pub fn canonicalize(w: &PartialWord) -> PartialWord {
    let mut map = [u8::MAX; Alphabet::MAX];
    let mut next = 0u8;
    let symbols = w
        .symbols()
        .iter()
        .map(|&s| match s {
            Symbol::Hole => Symbol::Hole,
            Symbol::Letter(l) => {
                let slot = &mut map[l as usize];
                if *slot == u8::MAX {
                    *slot = next;
                    next += 1;
                }
                Symbol::Letter(*slot)
            }
        })
        .collect();
    PartialWord::from_symbols(symbols, w.alphabet()).expect("renaming stays inside the alphabet")
}

pub fn is_canonical(symbols: &[Symbol]) -> bool {
    let mut used = 0u8;
    for s in symbols {
        if let Symbol::Letter(l) = *s {
            if l > used {
                return false;
            }
            if l == used {
                used += 1;
            }
        }
    }
    true
}

/// Number of distinct letters in a canonical word (its largest letter + 1).
pub(crate) fn letters_used(symbols: &[Symbol]) -> u8 {
    symbols
        .iter()
        .filter_map(|s| s.letter())
        .max()
        .map_or(0, |l| l + 1)
}

/// A set of words: all words of each length over `alphabet`, with or without
/// holes, optionally only canonical ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSpace {
    pub alphabet: Alphabet,
    pub holes: bool,
    pub canonical: bool,
}

impl WordSpace {
    pub fn new(alphabet: Alphabet, holes: bool, canonical: bool) -> Self {
        WordSpace {
            alphabet,
            holes,
            canonical,
        }
    }

    /// Symbols that may follow a prefix using `used` distinct letters, in order.
    pub(crate) fn choices(&self, used: u8) -> impl Iterator<Item = Symbol> {
        let k = self.alphabet.size() as u8;
        let top = if self.canonical { (used + 1).min(k) } else { k };
        let hole = self.holes.then_some(Symbol::Hole);
        hole.into_iter().chain((0..top).map(Symbol::Letter))
    }

    /// Number of letters a canonical node skips because they would be a
    /// second "new" letter.
    pub(crate) fn skipped(&self, used: u8) -> u64 {
        let k = self.alphabet.size() as u64;
        if self.canonical {
            k - (used as u64 + 1).min(k)
        } else {
            0
        }
    }

    /// Number of words of length `len`, saturating at `u128::MAX`.
    pub fn count(&self, len: usize) -> u128 {
        let k = self.alphabet.size();
        let h = u128::from(self.holes);
        if !self.canonical {
            return (k as u128 + h).saturating_pow(len as u32);
        }
        // ways[j]: prefixes using exactly j letters
        let mut ways = vec![0u128; k + 1];
        ways[0] = 1;
        for _ in 0..len {
            let mut next = vec![0u128; k + 1];
            for j in 0..=k {
                if ways[j] == 0 {
                    continue;
                }
                let stay = (j as u128 + h).saturating_mul(ways[j]);
                next[j] = next[j].saturating_add(stay);
                if j < k {
                    next[j + 1] = next[j + 1].saturating_add(ways[j]);
                }
            }
            ways = next;
        }
        ways.iter().fold(0u128, |acc, &x| acc.saturating_add(x))
    }

    /// All words of length `len` that extend `prefix`, in order.
    pub fn for_each_extension<B>(
        &self,
        prefix: &[Symbol],
        len: usize,
        mut f: impl FnMut(&[Symbol]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut buf = prefix.to_vec();
        buf.reserve(len.saturating_sub(prefix.len()));
        let used = letters_used(prefix);
        self.extend_rec(&mut buf, used, len, &mut f)
    }

    fn extend_rec<B>(
        &self,
        buf: &mut Vec<Symbol>,
        used: u8,
        len: usize,
        f: &mut impl FnMut(&[Symbol]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if buf.len() >= len {
            return f(buf);
        }
        for s in self.choices(used) {
            let now_used = match s {
                Symbol::Letter(l) if l == used => used + 1,
                _ => used,
            };
            buf.push(s);
            let flow = self.extend_rec(buf, now_used, len, f);
            buf.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// All words of length `len`, in order.
    pub fn words(&self, len: usize) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        let _ = self.for_each_extension::<()>(&[], len, |w| {
            out.push(w.to_vec());
            ControlFlow::Continue(())
        });
        out
    }
}
