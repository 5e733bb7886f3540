//! Brute-force oracles for power detection, checked against the library.
//!
//! The oracles here never call the periodicity code: a factor is a power
//! when some full word `x` satisfies `factor ⊂ x^r`, found either by trying
//! every `x` or by joining the `r` blocks of the factor.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use pword::enumerate::WordSpace;
use pword::powers::{
    distinct_power_factors, enumerate_roots, is_power, power_occurrences,
    power_occurrences_incremental, start_positions, unique_start_position,
};
use pword::{Alphabet, Exponent, PartialWord, Symbol};

fn w(s: &str) -> PartialWord {
    s.parse().unwrap()
}

fn r(n: usize) -> Exponent {
    Exponent::new(n).unwrap()
}

/// Every full word of length `p` over `alphabet`, lexicographic.
fn all_full_words(alphabet: Alphabet, p: usize) -> Vec<PartialWord> {
    WordSpace::new(alphabet, false, false)
        .words(p)
        .into_iter()
        .map(|s| PartialWord::from_symbols(s, alphabet).unwrap())
        .collect()
}

/// Roots by trying every full word of the right length.
fn brute_roots(f: &PartialWord, r: Exponent) -> Vec<PartialWord> {
    let n = f.len();
    if n == 0 || n % r.get() != 0 {
        return Vec::new();
    }
    all_full_words(f.alphabet(), n / r.get())
        .into_iter()
        .filter(|x| f.is_contained_in(&x.repeat(r.get())))
        .collect()
}

/// Power test by joining the blocks `f[1..p], f[p+1..2p], ...`.
fn join_is_power(f: &PartialWord, r: Exponent) -> bool {
    let n = f.len();
    if n == 0 || n % r.get() != 0 {
        return false;
    }
    let p = n / r.get();
    let mut acc = f.factor(1, p).unwrap();
    for b in 1..r.get() {
        match acc.join(&f.factor(b * p + 1, (b + 1) * p).unwrap()) {
            Ok(j) => acc = j,
            Err(_) => return false,
        }
    }
    // fill remaining holes with the first letter to get a full root
    let root: Vec<Symbol> = acc
        .symbols()
        .iter()
        .map(|s| if s.is_hole() { Symbol::Letter(0) } else { *s })
        .collect();
    let x = PartialWord::from_symbols(root, f.alphabet()).unwrap();
    f.is_contained_in(&x.repeat(r.get()))
}

fn oracle_is_power(f: &PartialWord, r: Exponent) -> bool {
    let n = f.len();
    if n == 0 || n % r.get() != 0 {
        return false;
    }
    let p = n / r.get();
    if (f.alphabet().size() as u64).pow(p as u32) <= 4096 {
        !brute_roots(f, r).is_empty()
    } else {
        join_is_power(f, r)
    }
}

fn oracle_occurrences(word: &PartialWord, r: Exponent) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=word.len() {
        for j in i..=word.len() {
            if oracle_is_power(&word.factor(i, j).unwrap(), r) {
                out.push((i, j - i + 1));
            }
        }
    }
    out
}

fn spans(word: &PartialWord, r: Exponent) -> Vec<(usize, usize)> {
    power_occurrences(word, r)
        .iter()
        .map(|o| (o.start, o.length))
        .collect()
}

#[test]
fn derived_examples_match_oracle() {
    // ".aba" ↑ "aaba": agreement on positions 2, 3, 4
    let (u, v) = (w(".aba"), w("aaba"));
    assert!(u
        .symbols()
        .iter()
        .zip(v.symbols())
        .all(|(a, b)| a.is_hole() || b.is_hole() || a == b));
    assert!(u.is_compatible(&v));

    // strong periods of ".aba", residue class by residue class
    let oracle_periods: Vec<usize> = (1..=4)
        .filter(|&p| {
            (0..p).all(|c| {
                let letters: BTreeSet<Symbol> = u
                    .symbols()
                    .iter()
                    .skip(c)
                    .step_by(p)
                    .copied()
                    .filter(|s| !s.is_hole())
                    .collect();
                letters.len() <= 1
            })
        })
        .collect();
    assert_eq!(oracle_periods, vec![2, 3, 4]);
    assert_eq!(u.strong_periods(), oracle_periods);

    // roots of ".aba" as a square
    let brute: Vec<String> = brute_roots(&u, r(2)).iter().map(|x| x.to_string()).collect();
    assert_eq!(brute, ["ba"]);
    let roots = enumerate_roots(&u, r(2), 10).unwrap();
    assert_eq!(roots.roots, brute_roots(&u, r(2)));

    // occurrences in "aaaa"
    let aaaa = w("aaaa");
    assert_eq!(oracle_occurrences(&aaaa, r(2)), [(1, 2), (1, 4), (2, 2), (3, 2)]);
    assert_eq!(spans(&aaaa, r(2)), oracle_occurrences(&aaaa, r(2)));
    assert_eq!(start_positions(&aaaa, r(2)), [1, 2, 3]);
    assert_eq!(unique_start_position(&aaaa, r(2)), None);

    // distinct factors: "aa" at three starts plus "aaaa"
    let oracle_distinct: BTreeSet<String> = oracle_occurrences(&aaaa, r(2))
        .iter()
        .map(|&(s, l)| aaaa.factor(s, s + l - 1).unwrap().to_string())
        .collect();
    assert_eq!(oracle_distinct.len(), 2);
    assert_eq!(distinct_power_factors(&aaaa, r(2)), 2);
    assert_eq!(distinct_power_factors(&u, r(2)), 2);
}

#[test]
fn power_definition_equivalence_exhaustive() {
    // every word with |w| <= 12 over k <= 2 letters plus holes, r in {2, 3}
    for k in 1..=2 {
        let alphabet = Alphabet::new(k).unwrap();
        let space = WordSpace::new(alphabet, true, false);
        for e in [2, 3] {
            let e = r(e);
            for len in (e.get()..=12).step_by(e.get()) {
                let roots_by_len = all_full_words(alphabet, len / e.get());
                let _ = space.for_each_extension::<()>(&[], len, |s| {
                    let word = PartialWord::from_symbols(s.to_vec(), alphabet).unwrap();
                    let found = roots_by_len
                        .iter()
                        .any(|x| word.is_contained_in(&x.repeat(e.get())));
                    assert_eq!(is_power(&word, e), found, "{word} r={e}");
                    ControlFlow::Continue(())
                });
            }
        }
    }
}

#[test]
fn root_enumeration_matches_brute_force() {
    for k in 1..=3 {
        let alphabet = Alphabet::new(k).unwrap();
        let space = WordSpace::new(alphabet, true, false);
        for e in [2, 3] {
            let e = r(e);
            for len in [e.get(), 2 * e.get(), 3 * e.get()] {
                if len > 9 {
                    continue;
                }
                for s in space.words(len) {
                    let word = PartialWord::from_symbols(s, alphabet).unwrap();
                    let brute = brute_roots(&word, e);
                    match enumerate_roots(&word, e, usize::MAX) {
                        Ok(roots) => {
                            assert_eq!(roots.roots, brute, "{word}");
                            assert_eq!(roots.total, Some(brute.len() as u128));
                        }
                        Err(_) => assert!(brute.is_empty(), "{word}"),
                    }
                }
            }
        }
    }
}

#[test]
fn occurrences_match_oracle_on_small_words() {
    let alphabet = Alphabet::new(2).unwrap();
    let space = WordSpace::new(alphabet, true, false);
    for len in 0..=7 {
        for s in space.words(len) {
            let word = PartialWord::from_symbols(s, alphabet).unwrap();
            for e in [2, 3] {
                let expected = oracle_occurrences(&word, r(e));
                assert_eq!(spans(&word, r(e)), expected, "{word} r={e}");
                let fast: Vec<(usize, usize)> = power_occurrences_incremental(&word, r(e))
                    .iter()
                    .map(|o| (o.start, o.length))
                    .collect();
                assert_eq!(fast, expected, "{word} r={e}");
            }
        }
    }
}
