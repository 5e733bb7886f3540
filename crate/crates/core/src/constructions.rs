//! Generators for explicit extremal partial words.

use crate::error::{Error, Result};
use crate::powers::Exponent;
use crate::word::{Alphabet, PartialWord, Symbol};

const A: Symbol = Symbol::Letter(0);
const B: Symbol = Symbol::Letter(1);
const HOLE: Symbol = Symbol::Hole;

fn binary() -> Alphabet {
    Alphabet::new(2).expect("binary alphabet")
}

/// `w_0 = ◊`, `w_{i+1} = w_i · a_{i+1} · w_i[2..]`; returns `w_k`, of length
/// `2^k`, over the first `max(k, 1)` letters.
///
/// Its squares are exactly the prefixes of length `2^j`, `1 <= j <= k`.
pub fn square_chain(k: usize) -> Result<PartialWord> {
    if k > Alphabet::MAX {
        return Err(Error::AlphabetTooSmall {
            needed: k,
            available: Alphabet::MAX,
        });
    }
    let alphabet = Alphabet::new(k.max(1))?;
    let mut symbols = vec![HOLE];
    for i in 0..k {
        let tail = symbols[1..].to_vec();
        symbols.push(Symbol::Letter(i as u8));
        symbols.extend(tail);
    }
    PartialWord::from_symbols(symbols, alphabet)
}

/// Like [`square_chain`] but checks the target alphabet is large enough.
pub fn square_chain_over(k: usize, alphabet: Alphabet) -> Result<PartialWord> {
    if k > alphabet.size() {
        return Err(Error::AlphabetTooSmall {
            needed: k,
            available: alphabet.size(),
        });
    }
    square_chain(k)?.with_alphabet(alphabet)
}

/// `◊^{r-1} a b a ◊^{r-2}`: two r-th powers, both at position 1.
pub fn two_power_word(r: usize) -> Result<PartialWord> {
    let r = Exponent::new(r)?.get();
    let mut symbols = vec![HOLE; r - 1];
    symbols.extend([A, B, A]);
    symbols.extend(std::iter::repeat_n(HOLE, r - 2));
    PartialWord::from_symbols(symbols, binary())
}

/// `◊^{r-1} a b a ◊^{r-2} b a a ◊^{r-3}`: three r-th powers, all at position
/// 1, for odd multiples of 3.
pub fn three_power_word(r: usize) -> Result<PartialWord> {
    if r < 3 || r % 2 == 0 || r % 3 != 0 {
        return Err(Error::BadExponent {
            r,
            reason: "need an odd multiple of 3",
        });
    }
    three_power_word_unchecked(r)
}

/// The same formula for any `r >= 3`, without the odd-multiple-of-3
/// hypothesis. The result is not guaranteed to have three r-th powers.
pub fn three_power_word_unchecked(r: usize) -> Result<PartialWord> {
    if r < 3 {
        return Err(Error::BadExponent {
            r,
            reason: "formula needs r >= 3",
        });
    }
    let mut symbols = vec![HOLE; r - 1];
    symbols.extend([A, B, A]);
    symbols.extend(std::iter::repeat_n(HOLE, r - 2));
    symbols.extend([B, A, A]);
    symbols.extend(std::iter::repeat_n(HOLE, r - 3));
    PartialWord::from_symbols(symbols, binary())
}

/// The two binary words with three cubes all starting at position 1.
pub fn cube_examples() -> Vec<PartialWord> {
    ["..aba.baa", "..aba.ba."]
        .iter()
        .map(|s| PartialWord::parse(s, binary()).expect("literal"))
        .collect()
}
