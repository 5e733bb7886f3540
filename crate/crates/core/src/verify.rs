//! Exhaustive checkers for the periodicity and power-counting results on
//! bounded instance spaces.
//!
//! Each claim has an instance predicate (the `*_violation` functions) and a
//! driver that sweeps every instance up to a size bound. Instances are
//! visited in length-then-lexicographic order (hole below letters) and only
//! canonical representatives under letter renaming are checked, since every
//! predicate here is invariant under renaming. A failing report carries the
//! least counterexample in that order, and [`replay`] re-checks it.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions;
use crate::enumerate::WordSpace;
use crate::error::{Error, Result};
use crate::powers::{power_occurrences, Exponent, PowerProfile, PowerScanner};
use crate::word::{is_strong_periodic, Alphabet, PartialWord, Symbol};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

// chunks are (length, prefix of this many symbols)
const SPLIT_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "fine-wilf")]
    FineWilf,
    #[serde(rename = "corollary-full")]
    CorollaryFull,
    #[serde(rename = "lemma-h1")]
    LemmaH1,
    #[serde(rename = "lemma-2k")]
    Lemma2k,
    #[serde(rename = "lemma-short")]
    LemmaShort,
    #[serde(rename = "theorem-sq")]
    TheoremSq,
    #[serde(rename = "construction")]
    Construction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: PartialWord,
    pub context: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub claim: Claim,
    pub parameters: BTreeMap<String, Value>,
    pub instances_checked: u64,
    pub outcome: Outcome,
    pub counterexample: Option<Counterexample>,
    /// Claim-specific statistics, e.g. how often the hypothesis held.
    pub observations: BTreeMap<String, Value>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Maximum number of instances a single run may check.
    pub budget: u64,
    /// Worker threads; results do not depend on this.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

/// Which generator [`verify_construction`] should check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    SquareChain { k: usize },
    Prop2 { r: usize },
    Prop3 { r: usize, unchecked: bool },
    CubeExamples,
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::SquareChain { .. } => "square-chain",
            Construction::Prop2 { .. } => "prop2",
            Construction::Prop3 { .. } => "prop3",
            Construction::CubeExamples => "cube-examples",
        }
    }

    /// Words to check, with the exponent and the exact expected
    /// `(start, length)` occurrences of each.
    fn cases(&self) -> Result<Vec<(PartialWord, Exponent, Vec<(usize, usize)>)>> {
        Ok(match *self {
            Construction::SquareChain { k } => {
                let expected = (1..=k).map(|j| (1, 1usize << j)).collect();
                vec![(constructions::square_chain(k)?, Exponent::SQUARE, expected)]
            }
            Construction::Prop2 { r } => {
                let w = constructions::two_power_word(r)?;
                vec![(w, Exponent::new(r)?, vec![(1, r), (1, 2 * r)])]
            }
            Construction::Prop3 { r, unchecked } => {
                let w = if unchecked {
                    constructions::three_power_word_unchecked(r)?
                } else {
                    constructions::three_power_word(r)?
                };
                vec![(w, Exponent::new(r)?, vec![(1, r), (1, 2 * r), (1, 3 * r)])]
            }
            Construction::CubeExamples => constructions::cube_examples()
                .into_iter()
                .map(|w| (w, Exponent::CUBE, vec![(1, 3), (1, 6), (1, 9)]))
                .collect(),
        })
    }

    fn parameters(&self) -> BTreeMap<String, Value> {
        let mut params = BTreeMap::new();
        params.insert("name".into(), json!(self.name()));
        match *self {
            Construction::SquareChain { k } => {
                params.insert("k".into(), json!(k));
            }
            Construction::Prop2 { r } => {
                params.insert("r".into(), json!(r));
            }
            Construction::Prop3 { r, unchecked } => {
                params.insert("r".into(), json!(r));
                params.insert("unchecked".into(), json!(unchecked));
            }
            Construction::CubeExamples => {}
        }
        params
    }
}

// ---------------------------------------------------------------------------
// instance predicates

fn squares(symbols: &[Symbol]) -> Vec<(usize, usize)> {
    occurrences(symbols, Exponent::SQUARE)
}

fn occurrences(symbols: &[Symbol], r: Exponent) -> Vec<(usize, usize)> {
    let mut scanner = PowerScanner::new(r);
    let mut out = Vec::new();
    for &s in symbols {
        out.extend(scanner.push(s).iter().map(|o| (o.start, o.length)));
    }
    out.sort_unstable();
    out
}

fn distinct_starts(occ: &[(usize, usize)]) -> usize {
    let mut n = 0;
    let mut last = 0;
    for &(s, _) in occ {
        if s != last {
            n += 1;
            last = s;
        }
    }
    n
}

fn fine_wilf_slice(symbols: &[Symbol], pairs: &mut u64) -> Option<(usize, usize)> {
    let n = symbols.len();
    let periods: Vec<usize> = (1..=n)
        .filter(|&p| is_strong_periodic(symbols, p))
        .collect();
    for (idx, &p) in periods.iter().enumerate() {
        for &q in &periods[idx + 1..] {
            let g = gcd(p, q);
            if n + g >= p + q {
                *pairs += 1;
                if !is_strong_periodic(symbols, g) {
                    return Some((p, q));
                }
            }
        }
    }
    None
}

/// Periods `p < q` of `w` with `|w| >= p + q - gcd(p, q)` for which
/// `gcd(p, q)` is not a period.
pub fn fine_wilf_violation(w: &PartialWord) -> Option<(usize, usize)> {
    fine_wilf_slice(w.symbols(), &mut 0)
}

fn corollary_slice(symbols: &[Symbol], r: Exponent) -> (bool, Option<usize>) {
    let occ = occurrences(symbols, r);
    let Some(&(last_start, _)) = occ.last() else {
        return (false, None);
    };
    let mut repeated = false;
    for pair in occ.windows(2) {
        if pair[0].0 == pair[1].0 {
            repeated = true;
            if pair[0].0 == last_start {
                return (true, Some(last_start));
            }
        }
    }
    (repeated, None)
}

/// A position that starts two or more r-th powers while no later position
/// starts one.
pub fn corollary_full_violation(w: &PartialWord, r: Exponent) -> Option<usize> {
    corollary_slice(w.symbols(), r).1
}

fn lemma_h1_slice(symbols: &[Symbol]) -> (bool, bool) {
    let occ = squares(symbols);
    let hypothesis = occ.len() > 1 && distinct_starts(&occ) == 1;
    let holes_ok = symbols
        .iter()
        .enumerate()
        .all(|(idx, s)| s.is_hole() == (idx == 0));
    (hypothesis, hypothesis && !holes_ok)
}

/// True when `w` has several squares, all starting at one position, yet its
/// hole set is not `{1}`.
pub fn lemma_h1_violation(w: &PartialWord) -> bool {
    lemma_h1_slice(w.symbols()).1
}

fn has_inner_square(occ: &[(usize, usize)], len: usize) -> bool {
    occ.iter().any(|&(s, _)| 1 < s && s < len)
}

// (hypothesis met, violating m)
fn lemma_2k_slice(w: &[Symbol], u_len: usize) -> (bool, Option<usize>) {
    let occ = squares(w);
    let hit = occ
        .iter()
        .find(|&&(s, l)| s == 1 && u_len < l && l < w.len())
        .map(|&(_, l)| l / 2);
    let bad = hit.filter(|_| !has_inner_square(&occ, w.len()));
    (hit.is_some(), bad)
}

/// For `w = uv` split after `u_len`: a square prefix of length `2m` with
/// `|u| < 2m < |w|` while no position strictly inside `w` starts a square.
/// Returns `m`.
pub fn lemma_2k_violation(w: &PartialWord, u_len: usize) -> Option<usize> {
    lemma_2k_slice(w.symbols(), u_len).1
}

fn lemma_short_slice(w: &[Symbol], u_len: usize) -> (bool, Option<usize>) {
    let Some(&v_first) = w.get(u_len) else {
        return (false, None);
    };
    let occ = squares(w);
    let mut hits = occ
        .iter()
        .filter(|&&(s, l)| s == 1 && l <= u_len)
        .map(|&(_, l)| l / 2)
        .filter(|&m| w[m] == v_first)
        .peekable();
    let Some(&first) = hits.peek() else {
        return (false, None);
    };
    let v_has_square = !squares(&w[u_len..]).is_empty();
    let ok = v_has_square && has_inner_square(&occ, w.len());
    (true, (!ok).then_some(first))
}

/// For `w = uv` split after `u_len`: a square prefix of length `2m <= |u|`
/// with `w[m+1] = v[1]` such that `v` has no square or no position strictly
/// inside `w` starts one. Returns `m`.
pub fn lemma_short_violation(w: &PartialWord, u_len: usize) -> Option<usize> {
    lemma_short_slice(w.symbols(), u_len).1
}

fn theorem_sq_slice(symbols: &[Symbol], k: usize) -> (Option<usize>, Option<usize>) {
    let occ = squares(symbols);
    if distinct_starts(&occ) != 1 {
        return (None, None);
    }
    let count = occ.len();
    (Some(count), (count > k).then_some(count))
}

/// The square count of `w` when a single position starts squares and there
/// are more than `k` of them.
pub fn theorem_sq_violation(w: &PartialWord, k: usize) -> Option<usize> {
    theorem_sq_slice(w.symbols(), k).1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// sweep engine

#[derive(Debug, Default)]
struct Tally {
    instances: u64,
    counters: BTreeMap<&'static str, u64>,
    best: Option<(u64, Vec<Symbol>)>,
}

impl Tally {
    fn bump(&mut self, key: &'static str, by: u64) {
        *self.counters.entry(key).or_default() += by;
    }

    /// Keeps the first word attaining the largest value.
    fn offer(&mut self, value: u64, word: &[Symbol]) {
        if self.best.as_ref().is_none_or(|(v, _)| value > *v) {
            self.best = Some((value, word.to_vec()));
        }
    }

    fn merge(&mut self, later: Tally) {
        self.instances += later.instances;
        for (k, v) in later.counters {
            self.bump(k, v);
        }
        if let Some((value, word)) = later.best {
            self.offer(value, &word);
        }
    }
}

struct Sweep {
    tally: Tally,
    failure: Option<Counterexample>,
}

type Visit<'a> = dyn Fn(&[Symbol], &mut Tally) -> Option<Counterexample> + Sync + 'a;

fn sweep(
    space: WordSpace,
    lengths: impl IntoIterator<Item = usize>,
    instances_per_word: u64,
    cfg: &VerifyConfig,
    visit: &Visit<'_>,
) -> Result<Sweep> {
    let lengths: Vec<usize> = lengths.into_iter().collect();
    let required = lengths
        .iter()
        .fold(0u128, |acc, &n| acc.saturating_add(space.count(n)))
        .saturating_mul(instances_per_word as u128);
    if required > cfg.budget as u128 {
        return Err(Error::ResourceLimit {
            required,
            budget: cfg.budget,
        });
    }

    let chunks: Vec<(usize, Vec<Symbol>)> = lengths
        .iter()
        .flat_map(|&n| {
            space
                .words(n.min(SPLIT_DEPTH))
                .into_iter()
                .map(move |prefix| (n, prefix))
        })
        .collect();

    let run = |(n, prefix): &(usize, Vec<Symbol>)| {
        let mut tally = Tally::default();
        let flow = space.for_each_extension(prefix, *n, |word| match visit(word, &mut tally) {
            Some(cex) => ControlFlow::Break(cex),
            None => ControlFlow::Continue(()),
        });
        let failure = match flow {
            ControlFlow::Break(cex) => Some(cex),
            ControlFlow::Continue(()) => None,
        };
        (tally, failure)
    };

    let mut total = Sweep {
        tally: Tally::default(),
        failure: None,
    };
    let mut absorb = |(tally, failure): (Tally, Option<Counterexample>)| {
        total.tally.merge(tally);
        total.failure = failure;
        total.failure.is_some()
    };

    if cfg.jobs <= 1 {
        for chunk in &chunks {
            if absorb(run(chunk)) {
                break;
            }
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::BadParameter {
                name: "jobs",
                reason: e.to_string(),
            })?;
        let results: Vec<_> = pool.install(|| chunks.par_iter().map(run).collect());
        for result in results {
            if absorb(result) {
                break;
            }
        }
    }
    Ok(total)
}

fn word_of(symbols: &[Symbol], alphabet: Alphabet) -> PartialWord {
    PartialWord::from_symbols(symbols.to_vec(), alphabet).expect("enumerated inside the alphabet")
}

fn alphabet_param(k: usize, min: usize) -> Result<Alphabet> {
    if k < min {
        return Err(Error::BadParameter {
            name: "k",
            reason: format!("must be at least {min}"),
        });
    }
    Alphabet::new(k)
}

fn positive(name: &'static str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::BadParameter {
            name,
            reason: "must be positive".into(),
        })
    } else {
        Ok(())
    }
}

fn finish(
    claim: Claim,
    parameters: BTreeMap<String, Value>,
    sweep: Sweep,
    started: Instant,
) -> VerificationReport {
    let mut observations: BTreeMap<String, Value> = sweep
        .tally
        .counters
        .iter()
        .map(|(k, v)| ((*k).to_string(), json!(v)))
        .collect();
    if let Some((value, word)) = &sweep.tally.best {
        observations.insert("maxObserved".into(), json!(value));
        let word = PartialWord::from_symbols_inferred(word.clone()).expect("letters in range");
        observations.insert("maxWitness".into(), json!(word.to_string()));
    }
    VerificationReport {
        claim,
        parameters,
        instances_checked: sweep.tally.instances,
        outcome: if sweep.failure.is_some() {
            Outcome::Fail
        } else {
            Outcome::Pass
        },
        counterexample: sweep.failure,
        observations,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

// ---------------------------------------------------------------------------
// drivers

/// Periods `p, q` of a full word with `|w| >= p + q - gcd(p, q)` imply that
/// `gcd(p, q)` is a period. Checked for all full words of length `<= max_len`.
pub fn verify_fine_wilf(k: usize, max_len: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let alphabet = alphabet_param(k, 1)?;
    positive("maxLen", max_len)?;
    let space = WordSpace::new(alphabet, false, true);
    let result = sweep(space, 1..=max_len, 1, cfg, &|w, tally| {
        tally.instances += 1;
        let mut pairs = 0;
        let bad = fine_wilf_slice(w, &mut pairs);
        tally.bump("periodPairs", pairs);
        bad.map(|(p, q)| Counterexample {
            word: word_of(w, alphabet),
            context: params([("p", json!(p)), ("q", json!(q)), ("gcd", json!(gcd(p, q)))]),
        })
    })?;
    Ok(finish(
        Claim::FineWilf,
        params([("k", json!(k)), ("maxLen", json!(max_len))]),
        result,
        started,
    ))
}

/// A full word in which one position starts two r-th powers has an r-th
/// power starting at a later position.
pub fn verify_corollary_full(
    r: usize,
    k: usize,
    max_len: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let exponent = Exponent::new(r)?;
    let alphabet = alphabet_param(k, 1)?;
    positive("maxLen", max_len)?;
    let space = WordSpace::new(alphabet, false, true);
    let result = sweep(space, 1..=max_len, 1, cfg, &|w, tally| {
        tally.instances += 1;
        let (repeated, bad) = corollary_slice(w, exponent);
        if repeated {
            tally.bump("wordsWithRepeatedStart", 1);
        }
        bad.map(|i| Counterexample {
            word: word_of(w, alphabet),
            context: params([("position", json!(i))]),
        })
    })?;
    Ok(finish(
        Claim::CorollaryFull,
        params([("r", json!(r)), ("k", json!(k)), ("maxLen", json!(max_len))]),
        result,
        started,
    ))
}

/// A partial word with more than one square, all starting at one position,
/// has exactly one hole, at position 1.
pub fn verify_lemma_h1(k: usize, max_len: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let alphabet = alphabet_param(k, 1)?;
    positive("maxLen", max_len)?;
    let space = WordSpace::new(alphabet, true, true);
    let result = sweep(space, 1..=max_len, 1, cfg, &|w, tally| {
        tally.instances += 1;
        let (hypothesis, bad) = lemma_h1_slice(w);
        if hypothesis {
            tally.bump("hypothesisHolds", 1);
        }
        bad.then(|| {
            let word = word_of(w, alphabet);
            let holes = word.hole_positions();
            Counterexample {
                word,
                context: params([("holes", json!(holes))]),
            }
        })
    })?;
    Ok(finish(
        Claim::LemmaH1,
        params([("k", json!(k)), ("maxLen", json!(max_len))]),
        result,
        started,
    ))
}

type SplitCheck = fn(&[Symbol], usize) -> (bool, Option<usize>);

/// Shared driver for the two lemmas about `w = uv` with `u = ◊u'` (`u'` full)
/// and `v` a full word compatible with `u`. Such a `v` has the form `x·u'`
/// for a letter `x`, so instances are pairs `(u', x)`.
fn verify_split(
    claim: Claim,
    k: usize,
    max_u_len: usize,
    cfg: &VerifyConfig,
    check: SplitCheck,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let alphabet = alphabet_param(k, 2)?;
    positive("maxULen", max_u_len)?;
    let space = WordSpace::new(alphabet, false, true);
    let result = sweep(space, 0..max_u_len, k as u64, cfg, &|tail, tally| {
        let u_len = tail.len() + 1;
        let mut w = Vec::with_capacity(2 * u_len);
        w.push(Symbol::Hole);
        w.extend_from_slice(tail);
        w.push(Symbol::Hole);
        w.extend_from_slice(tail);
        for x in alphabet.letters() {
            tally.instances += 1;
            w[u_len] = x;
            let (hypothesis, bad) = check(&w, u_len);
            if hypothesis {
                tally.bump("hypothesisHolds", 1);
            }
            if let Some(m) = bad {
                return Some(Counterexample {
                    word: word_of(&w, alphabet),
                    context: params([("uLength", json!(u_len)), ("m", json!(m))]),
                });
            }
        }
        None
    })?;
    Ok(finish(
        claim,
        params([("k", json!(k)), ("maxULen", json!(max_u_len))]),
        result,
        started,
    ))
}

/// With `w = uv` as above, a square prefix of length `2m`, `|u| < 2m < |w|`,
/// forces a square starting strictly inside `w`.
pub fn verify_lemma_2k(k: usize, max_u_len: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    verify_split(Claim::Lemma2k, k, max_u_len, cfg, lemma_2k_slice)
}

/// With `w = uv` as above, a square prefix of length `2m <= |u|` with
/// `w[m+1] = v[1]` forces a square in `v`.
pub fn verify_lemma_short(
    k: usize,
    max_u_len: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    verify_split(Claim::LemmaShort, k, max_u_len, cfg, lemma_short_slice)
}

/// A partial word over `k` letters in which a single position starts squares
/// has at most `k` squares.
pub fn verify_theorem_sq(k: usize, max_len: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let alphabet = alphabet_param(k, 1)?;
    positive("maxLen", max_len)?;
    let space = WordSpace::new(alphabet, true, true);
    let result = sweep(space, 1..=max_len, 1, cfg, &|w, tally| {
        tally.instances += 1;
        let (count, bad) = theorem_sq_slice(w, k);
        if let Some(count) = count {
            tally.bump("uniqueStartWords", 1);
            tally.offer(count as u64, w);
        }
        bad.map(|count| Counterexample {
            word: word_of(w, alphabet),
            context: params([("squares", json!(count))]),
        })
    })?;
    Ok(finish(
        Claim::TheoremSq,
        params([("k", json!(k)), ("maxLen", json!(max_len))]),
        result,
        started,
    ))
}

/// Builds the named word(s) and checks the exact power occurrences claimed
/// for them.
pub fn verify_construction(which: Construction) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut instances = 0;
    let mut failure = None;
    for (word, r, expected) in which.cases()? {
        instances += 1;
        let actual = PowerProfile::of(&word, r).spans();
        if actual != expected {
            failure = Some(Counterexample {
                word,
                context: params([
                    ("r", json!(r.get())),
                    ("expected", json!(expected)),
                    ("actual", json!(actual)),
                ]),
            });
            break;
        }
    }
    let mut observations = BTreeMap::new();
    observations.insert("words".into(), json!(instances));
    Ok(VerificationReport {
        claim: Claim::Construction,
        parameters: which.parameters(),
        instances_checked: instances,
        outcome: if failure.is_some() {
            Outcome::Fail
        } else {
            Outcome::Pass
        },
        counterexample: failure,
        observations,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn param_usize(map: &BTreeMap<String, Value>, key: &'static str) -> Result<usize> {
    map.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or(Error::BadParameter {
            name: key,
            reason: "missing from report".into(),
        })
}

/// Re-checks a failing report's counterexample through the public API.
/// `Ok(true)` means the violation reproduces.
pub fn replay(report: &VerificationReport) -> Result<bool> {
    let cex = report.counterexample.as_ref().ok_or(Error::BadParameter {
        name: "counterexample",
        reason: "report has no counterexample".into(),
    })?;
    let w = &cex.word;
    Ok(match report.claim {
        Claim::FineWilf => w.is_full() && fine_wilf_violation(w).is_some(),
        Claim::CorollaryFull => {
            let r = Exponent::new(param_usize(&report.parameters, "r")?)?;
            w.is_full() && corollary_full_violation(w, r).is_some()
        }
        Claim::LemmaH1 => lemma_h1_violation(w),
        Claim::Lemma2k => lemma_2k_violation(w, param_usize(&cex.context, "uLength")?).is_some(),
        Claim::LemmaShort => {
            lemma_short_violation(w, param_usize(&cex.context, "uLength")?).is_some()
        }
        Claim::TheoremSq => {
            theorem_sq_violation(w, param_usize(&report.parameters, "k")?).is_some()
        }
        Claim::Construction => {
            let r = Exponent::new(param_usize(&cex.context, "r")?)?;
            let actual: Vec<(usize, usize)> = power_occurrences(w, r)
                .iter()
                .map(|o| (o.start, o.length))
                .collect();
            json!(actual) != cex.context["expected"]
        }
    })
}
