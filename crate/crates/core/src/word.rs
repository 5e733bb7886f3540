//! Partial words: finite sequences over an alphabet extended with a hole.
//!
//! Every position-taking method in this module is 1-indexed: `w.at(1)` is the
//! first symbol and `w.factor(i, j)` is inclusive on both ends. The raw
//! [`PartialWord::symbols`] slice is the only 0-indexed view.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Canonical ASCII rendering of a hole.
pub const HOLE_CHAR: char = '.';
/// Alternative hole character accepted on input.
pub const HOLE_CHAR_ALT: char = '◊';

const MAX_ALPHABET: usize = 26;

/// Alphabet of `size` letters named `a`, `b`, `c`, ... in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const MAX: usize = MAX_ALPHABET;

    pub fn new(size: usize) -> Result<Self> {
        if (1..=MAX_ALPHABET).contains(&size) {
            Ok(Alphabet(size as u8))
        } else {
            Err(Error::BadAlphabetSize(size))
        }
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn letters(self) -> impl Iterator<Item = Symbol> {
        (0..self.0).map(Symbol::Letter)
    }

    pub fn contains(self, s: Symbol) -> bool {
        match s {
            Symbol::Hole => true,
            Symbol::Letter(l) => l < self.0,
        }
    }
}

/// A letter (by index into the alphabet) or a hole.
///
/// The derived order puts the hole below every letter, which is the order
/// used for all lexicographic tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Hole,
    Letter(u8),
}

impl Symbol {
    pub fn is_hole(self) -> bool {
        matches!(self, Symbol::Hole)
    }

    pub fn letter(self) -> Option<u8> {
        match self {
            Symbol::Hole => None,
            Symbol::Letter(l) => Some(l),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Hole => HOLE_CHAR,
            Symbol::Letter(l) => (b'a' + l) as char,
        }
    }

    /// Parses a single character; `None` for anything that is neither a
    /// lowercase ASCII letter nor a hole character.
    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            HOLE_CHAR | HOLE_CHAR_ALT => Some(Symbol::Hole),
            'a'..='z' => Some(Symbol::Letter(c as u8 - b'a')),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word over an alphabet plus the hole symbol.
///
/// A word without holes is a full word; there is no separate type for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialWord {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
}

impl PartialWord {
    pub fn empty(alphabet: Alphabet) -> Self {
        PartialWord {
            symbols: Vec::new(),
            alphabet,
        }
    }

    pub fn from_symbols(symbols: Vec<Symbol>, alphabet: Alphabet) -> Result<Self> {
        if let Some((idx, s)) = symbols
            .iter()
            .enumerate()
            .find(|(_, s)| !alphabet.contains(**s))
        {
            return Err(Error::LetterOutsideAlphabet {
                position: idx + 1,
                letter: s.to_char(),
                size: alphabet.size(),
            });
        }
        Ok(PartialWord { symbols, alphabet })
    }

    /// Builds a word over the smallest alphabet that holds all its letters.
    pub fn from_symbols_inferred(symbols: Vec<Symbol>) -> Result<Self> {
        let alphabet = Alphabet::new(infer_alphabet_size(&symbols))?;
        Self::from_symbols(symbols, alphabet)
    }

    /// Parses text over `alphabet`. Letters are `a`..`z`; holes are `.` or `◊`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let symbols = parse_symbols(text)?;
        Self::from_symbols(symbols, alphabet)
    }

    /// Parses text, inferring the alphabet size as one more than the largest
    /// letter index present (1 for words without letters).
    pub fn parse_inferred(text: &str) -> Result<Self> {
        Self::from_symbols_inferred(parse_symbols(text)?)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Same symbols over a different alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Self::from_symbols(self.symbols.clone(), alphabet)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|idx| self.symbols.get(idx).copied())
    }

    /// D(w): positions holding a letter.
    pub fn defined_positions(&self) -> Vec<usize> {
        self.positions_where(|s| !s.is_hole())
    }

    /// H(w): positions holding a hole.
    pub fn hole_positions(&self) -> Vec<usize> {
        self.positions_where(Symbol::is_hole)
    }

    fn positions_where(&self, pred: impl Fn(Symbol) -> bool) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| pred(**s))
            .map(|(idx, _)| idx + 1)
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.symbols.iter().all(|s| !s.is_hole())
    }

    /// The factor `w[i..j]`, inclusive, with `1 <= i <= j <= |w|`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::OutOfRange {
                i,
                j,
                len: self.len(),
            });
        }
        Ok(PartialWord {
            symbols: self.symbols[i - 1..j].to_vec(),
            alphabet: self.alphabet,
        })
    }

    /// `self ⊂ other`: same length, and every letter of `self` appears at
    /// the same position in `other`.
    pub fn is_contained_in(&self, other: &PartialWord) -> bool {
        self.len() == other.len()
            && self
                .symbols
                .iter()
                .zip(&other.symbols)
                .all(|(a, b)| a.is_hole() || a == b)
    }

    /// `self ↑ other`: same length and agreement wherever both are defined.
    pub fn is_compatible(&self, other: &PartialWord) -> bool {
        self.len() == other.len()
            && self
                .symbols
                .iter()
                .zip(&other.symbols)
                .all(|(a, b)| a.is_hole() || b.is_hole() || a == b)
    }

    /// Least word containing both `self` and `other`. The result uses the
    /// larger of the two alphabets.
    pub fn join(&self, other: &PartialWord) -> Result<Self> {
        if !self.is_compatible(other) {
            return Err(Error::Incompatible);
        }
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| if a.is_hole() { b } else { a })
            .collect();
        Ok(PartialWord {
            symbols,
            alphabet: self.alphabet.max(other.alphabet),
        })
    }

    /// Strong periodicity: letters at positions congruent mod `p` agree.
    ///
    /// # Panics
    ///
    /// If `p == 0`.
    pub fn is_strong_periodic(&self, p: usize) -> bool {
        assert!(p >= 1, "period must be positive");
        is_strong_periodic(&self.symbols, p)
    }

    /// All strong periods `p` in `1..=|w|`, ascending. Empty for the empty word.
    pub fn strong_periods(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| is_strong_periodic(&self.symbols, p))
            .collect()
    }

    /// `w` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Self {
        PartialWord {
            symbols: self.symbols.repeat(times),
            alphabet: self.alphabet,
        }
    }

    /// Concatenation; the result uses the larger alphabet.
    pub fn concat(&self, other: &PartialWord) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        PartialWord {
            symbols,
            alphabet: self.alphabet.max(other.alphabet),
        }
    }
}

pub(crate) fn infer_alphabet_size(symbols: &[Symbol]) -> usize {
    symbols
        .iter()
        .filter_map(|s| s.letter())
        .max()
        .map_or(1, |l| l as usize + 1)
}

fn parse_symbols(text: &str) -> Result<Vec<Symbol>> {
    text.chars()
        .enumerate()
        .map(|(idx, ch)| {
            Symbol::from_char(ch).ok_or(Error::InvalidCharacter {
                position: idx + 1,
                ch,
            })
        })
        .collect()
}

/// Residue-class check on a raw slice. `p` must be positive.
pub(crate) fn is_strong_periodic(symbols: &[Symbol], p: usize) -> bool {
    if p >= symbols.len() {
        return true;
    }
    let mut class_letter: Vec<Option<u8>> = vec![None; p];
    for (idx, s) in symbols.iter().enumerate() {
        if let Symbol::Letter(l) = *s {
            match &mut class_letter[idx % p] {
                slot @ None => *slot = Some(l),
                Some(seen) if *seen != l => return false,
                Some(_) => {}
            }
        }
    }
    true
}

impl fmt::Display for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PartialWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartialWord::parse_inferred(s)
    }
}

impl Serialize for PartialWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PartialWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
