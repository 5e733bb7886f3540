//! Detection and enumeration of r-th powers in partial words.
//!
//! A partial word `w` is an r-th power when `w ⊂ x^r` for some nonempty full
//! word `x`. That holds exactly when `r` divides `|w|` and `w` is strongly
//! periodic with period `|w| / r`: each residue class carrying a letter fixes
//! the corresponding letter of `x`, and all-hole classes take any letter.
//!
//! Powers are counted as occurrences, i.e. `(start, length)` pairs.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{is_strong_periodic, PartialWord, Symbol};

/// Exponent `r >= 2` of a power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Exponent(usize);

impl Exponent {
    pub const SQUARE: Exponent = Exponent(2);
    pub const CUBE: Exponent = Exponent(3);

    pub fn new(r: usize) -> Result<Self> {
        if r >= 2 {
            Ok(Exponent(r))
        } else {
            Err(Error::BadExponent {
                r,
                reason: "exponent must be at least 2",
            })
        }
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl TryFrom<usize> for Exponent {
    type Error = Error;

    fn try_from(r: usize) -> Result<Self> {
        Exponent::new(r)
    }
}

impl From<Exponent> for usize {
    fn from(r: Exponent) -> usize {
        r.0
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An r-th power factor `w[start..start+length-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerOccurrence {
    pub start: usize,
    pub length: usize,
    pub exponent: Exponent,
}

impl PowerOccurrence {
    pub fn root_length(&self) -> usize {
        self.length / self.exponent.get()
    }

    pub fn end(&self) -> usize {
        self.start + self.length - 1
    }
}

/// True when the slice is a nonempty r-th power.
pub(crate) fn is_power_slice(symbols: &[Symbol], r: Exponent) -> bool {
    let n = symbols.len();
    n > 0 && n % r.get() == 0 && is_strong_periodic(symbols, n / r.get())
}

/// Whether `w ⊂ x^r` for some nonempty full word `x`. The empty word is not
/// a power.
pub fn is_power(w: &PartialWord, r: Exponent) -> bool {
    is_power_slice(w.symbols(), r)
}

/// Roots of a power, materialized up to a cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roots {
    /// Full words `x` with `w ⊂ x^r`, lexicographic, at most `cap` of them.
    pub roots: Vec<PartialWord>,
    /// Residue classes containing only holes.
    pub free_classes: usize,
    /// `k^free_classes`, or `None` if that overflows `u128`.
    pub total: Option<u128>,
}

/// Lists the full words `x` with `w ⊂ x^r` in lexicographic order.
pub fn enumerate_roots(w: &PartialWord, r: Exponent, cap: usize) -> Result<Roots> {
    if !is_power(w, r) {
        return Err(Error::NotAPower { r: r.get() });
    }
    let p = w.len() / r.get();
    let mut root: Vec<Option<u8>> = vec![None; p];
    for (idx, s) in w.symbols().iter().enumerate() {
        if let Some(l) = s.letter() {
            root[idx % p] = Some(l);
        }
    }
    let free: Vec<usize> = (0..p).filter(|&i| root[i].is_none()).collect();
    let k = w.alphabet().size();
    let total = u32::try_from(free.len())
        .ok()
        .and_then(|h| (k as u128).checked_pow(h));

    let mut base: Vec<Symbol> = root
        .iter()
        .map(|l| Symbol::Letter(l.unwrap_or(0)))
        .collect();
    let mut roots = Vec::new();
    // odometer over the free positions, last position fastest
    'outer: while roots.len() < cap {
        roots.push(PartialWord::from_symbols(base.clone(), w.alphabet())?);
        for &pos in free.iter().rev() {
            let Symbol::Letter(l) = base[pos] else {
                unreachable!()
            };
            if (l as usize) + 1 < k {
                base[pos] = Symbol::Letter(l + 1);
                continue 'outer;
            }
            base[pos] = Symbol::Letter(0);
        }
        break;
    }
    Ok(Roots {
        roots,
        free_classes: free.len(),
        total,
    })
}

/// Every r-th power occurrence in `w`, sorted by start then length.
///
/// This is the reference scan: each candidate `(start, length)` is checked
/// independently with a residue-class test.
pub fn power_occurrences(w: &PartialWord, r: Exponent) -> Vec<PowerOccurrence> {
    let symbols = w.symbols();
    let n = symbols.len();
    let mut out = Vec::new();
    for start in 1..=n {
        let room = n - start + 1;
        for p in 1..=room / r.get() {
            let length = p * r.get();
            if is_strong_periodic(&symbols[start - 1..start - 1 + length], p) {
                out.push(PowerOccurrence {
                    start,
                    length,
                    exponent: r,
                });
            }
        }
    }
    out
}

/// Same result as [`power_occurrences`], computed with [`PowerScanner`].
pub fn power_occurrences_incremental(w: &PartialWord, r: Exponent) -> Vec<PowerOccurrence> {
    let mut scanner = PowerScanner::new(r);
    let mut out = Vec::new();
    for &s in w.symbols() {
        out.extend_from_slice(scanner.push(s));
    }
    out.sort_unstable();
    out
}

/// Ascending distinct start positions of r-th power occurrences.
pub fn start_positions(w: &PartialWord, r: Exponent) -> Vec<usize> {
    let starts: BTreeSet<usize> = power_occurrences(w, r).iter().map(|o| o.start).collect();
    starts.into_iter().collect()
}

/// The start position, if exactly one position starts an r-th power.
pub fn unique_start_position(w: &PartialWord, r: Exponent) -> Option<usize> {
    match start_positions(w, r).as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

/// Number of distinct factors (as symbol sequences, holes included) among
/// the r-th power occurrences.
pub fn distinct_power_factors(w: &PartialWord, r: Exponent) -> usize {
    let symbols = w.symbols();
    power_occurrences(w, r)
        .iter()
        .map(|o| &symbols[o.start - 1..o.end()])
        .collect::<BTreeSet<_>>()
        .len()
}

/// All r-th power occurrences of a word with their start positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ProfileDoc", try_from = "ProfileDoc")]
pub struct PowerProfile {
    pub word: PartialWord,
    pub exponent: Exponent,
    pub occurrences: Vec<PowerOccurrence>,
    pub start_positions: Vec<usize>,
    pub unique_start: Option<usize>,
}

impl PowerProfile {
    pub fn of(w: &PartialWord, r: Exponent) -> Self {
        let occurrences = power_occurrences(w, r);
        let starts: BTreeSet<usize> = occurrences.iter().map(|o| o.start).collect();
        let start_positions: Vec<usize> = starts.into_iter().collect();
        let unique_start = match start_positions.as_slice() {
            [only] => Some(*only),
            _ => None,
        };
        PowerProfile {
            word: w.clone(),
            exponent: r,
            occurrences,
            start_positions,
            unique_start,
        }
    }

    pub fn count(&self) -> usize {
        self.occurrences.len()
    }

    /// `(start, length)` pairs in order.
    pub fn spans(&self) -> Vec<(usize, usize)> {
        self.occurrences
            .iter()
            .map(|o| (o.start, o.length))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ProfileDoc {
    word: PartialWord,
    r: Exponent,
    occurrences: Vec<SpanDoc>,
    start_positions: Vec<usize>,
    unique_start: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpanDoc {
    start: usize,
    length: usize,
}

impl From<PowerProfile> for ProfileDoc {
    fn from(p: PowerProfile) -> Self {
        ProfileDoc {
            word: p.word,
            r: p.exponent,
            occurrences: p
                .occurrences
                .iter()
                .map(|o| SpanDoc {
                    start: o.start,
                    length: o.length,
                })
                .collect(),
            start_positions: p.start_positions,
            unique_start: p.unique_start,
        }
    }
}

impl TryFrom<ProfileDoc> for PowerProfile {
    type Error = Error;

    fn try_from(doc: ProfileDoc) -> Result<Self> {
        let occurrences = doc
            .occurrences
            .iter()
            .map(|s| PowerOccurrence {
                start: s.start,
                length: s.length,
                exponent: doc.r,
            })
            .collect();
        Ok(PowerProfile {
            word: doc.word,
            exponent: doc.r,
            occurrences,
            start_positions: doc.start_positions,
            unique_start: doc.unique_start,
        })
    }
}

/// Incremental r-th power detector over a word built by appending symbols.
///
/// Appending position `m` can only create occurrences that end at `m`, since
/// the factor at a fixed `(start, length)` never changes. For each root
/// length `p` the scanner keeps the largest left endpoint of a conflicting
/// pair (two different letters at positions congruent mod `p`). The factor
/// ending at `m` with root length `p` is a power iff it starts after that
/// endpoint. A push costs `O(m log m)`; [`PowerScanner::pop`] undoes a push.
#[derive(Debug, Clone)]
pub struct PowerScanner {
    r: Exponent,
    symbols: Vec<Symbol>,
    // conflicts[m][p]: largest left index of a conflicting pair mod p in w[1..m], 0 if none
    conflicts: Vec<Vec<usize>>,
    // new_occurrences[m]: occurrences ending at m
    new_occurrences: Vec<Vec<PowerOccurrence>>,
    starts_at: Vec<u32>,
    distinct_starts: usize,
    occurrence_count: usize,
}

impl PowerScanner {
    pub fn new(r: Exponent) -> Self {
        PowerScanner {
            r,
            symbols: Vec::new(),
            conflicts: vec![Vec::new()],
            new_occurrences: vec![Vec::new()],
            starts_at: vec![0],
            distinct_starts: 0,
            occurrence_count: 0,
        }
    }

    pub fn exponent(&self) -> Exponent {
        self.r
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Total occurrences in the current word.
    pub fn occurrence_count(&self) -> usize {
        self.occurrence_count
    }

    /// Number of distinct positions starting an occurrence.
    pub fn start_count(&self) -> usize {
        self.distinct_starts
    }

    pub fn starts_power(&self, position: usize) -> bool {
        self.starts_at.get(position).is_some_and(|&c| c > 0)
    }

    /// Appends a symbol and returns the occurrences ending at the new last
    /// position, by ascending start.
    pub fn push(&mut self, s: Symbol) -> &[PowerOccurrence] {
        self.symbols.push(s);
        let m = self.symbols.len();
        if self.conflicts.len() <= m {
            self.conflicts.push(Vec::new());
            self.new_occurrences.push(Vec::new());
            self.starts_at.push(0);
        }

        let (prev, cur) = self.conflicts.split_at_mut(m);
        let prev = &prev[m - 1];
        let cur = &mut cur[0];
        cur.clear();
        cur.extend_from_slice(prev);
        // distance m-1 had no pairs inside w[1..m-1]
        cur.resize(m, 0);
        if let Symbol::Letter(c) = s {
            for p in 1..m {
                let mut i = m - p;
                loop {
                    if let Symbol::Letter(l) = self.symbols[i - 1] {
                        if l != c {
                            if i > cur[p] {
                                cur[p] = i;
                            }
                            break;
                        }
                    }
                    if i <= p {
                        break;
                    }
                    i -= p;
                }
            }
        }

        let r = self.r.get();
        let found = &mut self.new_occurrences[m];
        found.clear();
        for p in (1..=m / r).rev() {
            let length = p * r;
            let start = m - length + 1;
            if start > cur[p] {
                found.push(PowerOccurrence {
                    start,
                    length,
                    exponent: self.r,
                });
            }
        }
        for o in found.iter() {
            if self.starts_at[o.start] == 0 {
                self.distinct_starts += 1;
            }
            self.starts_at[o.start] += 1;
        }
        self.occurrence_count += found.len();
        &self.new_occurrences[m]
    }

    /// Removes the last symbol, undoing its occurrences.
    pub fn pop(&mut self) -> Option<Symbol> {
        let m = self.symbols.len();
        let s = self.symbols.pop()?;
        for o in &self.new_occurrences[m] {
            self.starts_at[o.start] -= 1;
            if self.starts_at[o.start] == 0 {
                self.distinct_starts -= 1;
            }
        }
        self.occurrence_count -= self.new_occurrences[m].len();
        self.new_occurrences[m].clear();
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w(s: &str) -> PartialWord {
        s.parse().unwrap()
    }

    fn r(n: usize) -> Exponent {
        Exponent::new(n).unwrap()
    }

    fn spans(word: &str, e: usize) -> Vec<(usize, usize)> {
        power_occurrences(&w(word), r(e))
            .iter()
            .map(|o| (o.start, o.length))
            .collect()
    }

    #[test]
    fn exponent_bounds() {
        assert!(Exponent::new(1).is_err());
        assert!(Exponent::new(0).is_err());
        assert_eq!(Exponent::new(2).unwrap(), Exponent::SQUARE);
    }

    #[test]
    fn power_predicate() {
        assert!(is_power(&w("a.bac.acb"), r(3)));
        assert!(is_power(&w(".a"), r(2)));
        assert!(!is_power(&w("aba"), r(2)));
        assert!(!is_power(&w(""), r(2)));
    }

    #[test]
    fn roots_of_example_cube() {
        let roots = enumerate_roots(&w("a.bac.acb"), r(3), 10).unwrap();
        let names: Vec<String> = roots.roots.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["acb"]);
        assert_eq!(roots.total, Some(1));
    }

    #[test]
    fn roots_with_free_class() {
        let word = PartialWord::parse("..", Alphabet::new(2).unwrap()).unwrap();
        let roots = enumerate_roots(&word, r(2), 10).unwrap();
        let names: Vec<String> = roots.roots.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["a", "b"]);
        assert_eq!(roots.free_classes, 1);
        assert_eq!(roots.total, Some(2));
    }

    #[test]
    fn roots_respect_cap_and_order() {
        let word = PartialWord::parse("...", Alphabet::new(3).unwrap()).unwrap();
        let all = enumerate_roots(&word.repeat(2), r(2), 100).unwrap();
        assert_eq!(all.total, Some(27));
        assert_eq!(all.roots.len(), 27);
        assert!(all.roots.windows(2).all(|p| p[0].symbols() < p[1].symbols()));
        let capped = enumerate_roots(&word.repeat(2), r(2), 4).unwrap();
        assert_eq!(capped.roots, all.roots[..4].to_vec());
    }

    #[test]
    fn roots_of_non_power() {
        assert_eq!(
            enumerate_roots(&w("ab"), r(2), 5),
            Err(Error::NotAPower { r: 2 })
        );
    }

    #[test]
    fn occurrence_lists() {
        assert_eq!(spans(".aba", 2), [(1, 2), (1, 4)]);
        assert_eq!(spans("..aba.baa", 3), [(1, 3), (1, 6), (1, 9)]);
        assert!(spans("ab", 2).is_empty());
        assert_eq!(spans("aaaa", 2), [(1, 2), (1, 4), (2, 2), (3, 2)]);
    }

    #[test]
    fn starts_and_uniqueness() {
        assert_eq!(start_positions(&w(".abacaba"), r(2)), [1]);
        assert_eq!(unique_start_position(&w(".abacaba"), r(2)), Some(1));
        assert_eq!(start_positions(&w("aaaa"), r(2)), [1, 2, 3]);
        assert_eq!(unique_start_position(&w("aaaa"), r(2)), None);
        assert!(start_positions(&w("ab"), r(2)).is_empty());
        assert_eq!(unique_start_position(&w("ab"), r(2)), None);
    }

    #[test]
    fn distinct_factor_counts() {
        assert_eq!(distinct_power_factors(&w(".aba"), r(2)), 2);
        assert_eq!(distinct_power_factors(&w("aaaa"), r(2)), 2);
        assert_eq!(distinct_power_factors(&w("ab"), r(2)), 0);
    }

    #[test]
    fn profile_json_shape() {
        let profile = PowerProfile::of(&w(".aba"), r(2));
        let json = serde_json::to_string(&profile).unwrap();
        assert_eq!(
            json,
            r#"{"word":".aba","r":2,"occurrences":[{"start":1,"length":2},{"start":1,"length":4}],"startPositions":[1],"uniqueStart":1}"#
        );
        let back: PowerProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, profile);
    }

    #[test]
    fn scanner_matches_reference_on_examples() {
        for (word, e) in [
            (".abacabadabacaba", 2),
            ("..aba.baa", 3),
            ("aaaaaa", 2),
            ("a.bac.acb", 3),
            ("abab.bab", 2),
        ] {
            let word = w(word);
            assert_eq!(
                power_occurrences_incremental(&word, r(e)),
                power_occurrences(&word, r(e)),
                "{word}"
            );
        }
    }

    #[test]
    fn scanner_pop_restores_state() {
        let mut scanner = PowerScanner::new(r(2));
        for s in w("aab").symbols() {
            scanner.push(*s);
        }
        assert_eq!(scanner.occurrence_count(), 1);
        assert_eq!(scanner.start_count(), 1);
        scanner.push(Symbol::Letter(1));
        assert_eq!(scanner.occurrence_count(), 2);
        assert_eq!(scanner.start_count(), 2);
        assert!(scanner.starts_power(3));
        scanner.pop();
        assert_eq!(scanner.occurrence_count(), 1);
        assert_eq!(scanner.start_count(), 1);
        assert!(!scanner.starts_power(3));
        scanner.push(Symbol::Letter(0));
        // aaba: only aa at (1,2)
        assert_eq!(scanner.occurrence_count(), 1);
    }
}
