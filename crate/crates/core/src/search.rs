//! Exhaustive search for partial words with many r-th powers but few
//! positions starting one.
//!
//! For a query `(r, k, n, t)` the search finds the largest number of r-th
//! power occurrences in a partial word over `k` letters of length at most
//! `n` in which at most `t` positions start an r-th power. With `t = 1`
//! this is the length-bounded version of the maximum number of r-th powers
//! in a word with a unique power position.
//!
//! Words are generated depth-first by appending symbols, restricted to
//! canonical representatives (letters introduced in alphabetical order).
//! Since appending a symbol never removes an occurrence, the set of start
//! positions only grows along a branch, so a node with more than `t`
//! starts is cut together with its subtree.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::WordSpace;
use crate::error::{Error, Result};
use crate::powers::{Exponent, PowerScanner};
use crate::word::{Alphabet, PartialWord, Symbol};

pub use crate::enumerate::canonicalize;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_WITNESS_CAP: usize = 10;

const PROGRESS_EVERY: u64 = 10_000_000;
const FLUSH_EVERY: u64 = 4096;
const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchQuery {
    pub r: Exponent,
    pub k: usize,
    pub max_len: usize,
    /// Most positions allowed to start an r-th power.
    pub t: usize,
    pub witness_cap: usize,
}

impl SearchQuery {
    pub fn new(r: usize, k: usize, max_len: usize) -> Result<Self> {
        let q = SearchQuery {
            r: Exponent::new(r)?,
            k,
            max_len,
            t: 1,
            witness_cap: DEFAULT_WITNESS_CAP,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn with_t(mut self, t: usize) -> Self {
        self.t = t;
        self
    }

    pub fn with_witness_cap(mut self, cap: usize) -> Self {
        self.witness_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<Alphabet> {
        for (name, value) in [
            ("maxLen", self.max_len),
            ("t", self.t),
            ("witnessCap", self.witness_cap),
        ] {
            if value == 0 {
                return Err(Error::BadParameter {
                    name,
                    reason: "must be positive".into(),
                });
            }
        }
        Alphabet::new(self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node budget; once spent the result is a lower bound only.
    pub budget: u64,
    pub jobs: usize,
    /// Cut subtrees below nodes with more than `t` start positions. Turning
    /// this off does not change the result, only the work done.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            jobs: 1,
            prune: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub query: SearchQuery,
    pub best_count: usize,
    /// Canonical words attaining `best_count`, shortest then lexicographically
    /// least first, at most `witness_cap` of them.
    pub witnesses: Vec<PartialWord>,
    pub nodes_explored: u64,
    pub pruned_by_symmetry: u64,
    pub pruned_by_start_bound: u64,
    /// False when the budget ran out; `best_count` is then a lower bound.
    pub exhaustive: bool,
}

#[derive(Default)]
struct Shared {
    nodes: AtomicU64,
    best: AtomicUsize,
    stop: AtomicBool,
}

#[derive(Debug, Default)]
struct Partial {
    best: Option<usize>,
    witnesses: BTreeSet<(usize, Vec<Symbol>)>,
    nodes: u64,
    unflushed: u64,
    pruned_by_symmetry: u64,
    pruned_by_start_bound: u64,
}

impl Partial {
    fn merge(&mut self, other: Partial, cap: usize) {
        self.nodes += other.nodes;
        self.pruned_by_symmetry += other.pruned_by_symmetry;
        self.pruned_by_start_bound += other.pruned_by_start_bound;
        let Some(theirs) = other.best else { return };
        match self.best {
            Some(mine) if mine > theirs => {}
            Some(mine) if mine == theirs => {
                self.witnesses.extend(other.witnesses);
                while self.witnesses.len() > cap {
                    self.witnesses.pop_last();
                }
            }
            _ => {
                self.best = Some(theirs);
                self.witnesses = other.witnesses;
            }
        }
    }
}

struct Explorer<'a> {
    query: &'a SearchQuery,
    opts: &'a SearchOptions,
    space: WordSpace,
    shared: &'a Shared,
    scanner: PowerScanner,
    used: u8,
    out: Partial,
    // Some(depth): stop expanding at this depth and record the prefix
    split_at: Option<usize>,
    prefixes: Vec<Vec<Symbol>>,
}

impl<'a> Explorer<'a> {
    fn new(query: &'a SearchQuery, opts: &'a SearchOptions, space: WordSpace, shared: &'a Shared) -> Self {
        Explorer {
            query,
            opts,
            space,
            shared,
            scanner: PowerScanner::new(query.r),
            used: 0,
            out: Partial::default(),
            split_at: None,
            prefixes: Vec::new(),
        }
    }

    fn descend_to(&mut self, prefix: &[Symbol]) {
        for &s in prefix {
            self.scanner.push(s);
        }
        self.used = crate::enumerate::letters_used(prefix);
    }

    fn count_node(&mut self) -> bool {
        self.out.nodes += 1;
        self.out.unflushed += 1;
        if self.out.unflushed >= FLUSH_EVERY {
            self.flush();
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let n = std::mem::take(&mut self.out.unflushed);
        let before = self.shared.nodes.fetch_add(n, Ordering::Relaxed);
        let after = before + n;
        if after > self.opts.budget {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        if before / PROGRESS_EVERY != after / PROGRESS_EVERY {
            info!(
                "search r={} k={} n={} t={}: {} nodes, best so far {}",
                self.query.r,
                self.query.k,
                self.query.max_len,
                self.query.t,
                after,
                self.shared.best.load(Ordering::Relaxed)
            );
        }
    }

    fn record(&mut self, count: usize) {
        let key = (self.scanner.len(), self.scanner.symbols().to_vec());
        match self.out.best {
            Some(best) if best > count => return,
            Some(best) if best == count => {}
            _ => {
                self.out.best = Some(count);
                self.out.witnesses.clear();
                self.shared.best.fetch_max(count, Ordering::Relaxed);
            }
        }
        self.out.witnesses.insert(key);
        if self.out.witnesses.len() > self.query.witness_cap {
            self.out.witnesses.pop_last();
        }
    }

    /// Visits every descendant of the current node.
    fn explore(&mut self) {
        if self.scanner.len() >= self.query.max_len {
            return;
        }
        if Some(self.scanner.len()) == self.split_at {
            self.prefixes.push(self.scanner.symbols().to_vec());
            return;
        }
        self.out.pruned_by_symmetry += self.space.skipped(self.used);
        let used = self.used;
        for s in self.space.choices(used) {
            if !self.count_node() {
                return;
            }
            self.scanner.push(s);
            self.used = match s {
                Symbol::Letter(l) if l == used => used + 1,
                _ => used,
            };
            let starts = self.scanner.start_count();
            if starts <= self.query.t {
                self.record(self.scanner.occurrence_count());
                self.explore();
            } else if self.opts.prune {
                self.out.pruned_by_start_bound += 1;
            } else {
                self.explore();
            }
            self.scanner.pop();
            self.used = used;
        }
    }
}

/// Largest number of r-th power occurrences over canonical partial words of
/// length `1..=max_len` with at most `t` start positions.
pub fn search_max_powers(query: &SearchQuery, opts: &SearchOptions) -> Result<SearchResult> {
    let alphabet = query.validate()?;
    let space = WordSpace::new(alphabet, true, true);
    let shared = Shared::default();

    // shallow levels on this thread, subtrees below SPLIT_DEPTH as tasks
    let mut root = Explorer::new(query, opts, space, &shared);
    root.split_at = Some(SPLIT_DEPTH);
    root.explore();
    root.flush();
    let prefixes = std::mem::take(&mut root.prefixes);
    let mut total = std::mem::take(&mut root.out);

    let run = |prefix: &Vec<Symbol>| {
        let mut task = Explorer::new(query, opts, space, &shared);
        task.descend_to(prefix);
        task.explore();
        task.flush();
        task.out
    };
    let parts: Vec<Partial> = if opts.jobs <= 1 {
        prefixes.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::BadParameter {
                name: "jobs",
                reason: e.to_string(),
            })?;
        pool.install(|| prefixes.par_iter().map(run).collect())
    };
    for part in parts {
        total.merge(part, query.witness_cap);
    }
    let exhaustive = total.nodes <= opts.budget && !shared.stop.load(Ordering::Relaxed);

    let witnesses = total
        .witnesses
        .into_iter()
        .map(|(_, symbols)| PartialWord::from_symbols(symbols, alphabet))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchResult {
        query: *query,
        best_count: total.best.unwrap_or(0),
        witnesses,
        nodes_explored: total.nodes,
        pruned_by_symmetry: total.pruned_by_symmetry,
        pruned_by_start_bound: total.pruned_by_start_bound,
        exhaustive,
    })
}

/// What is already known about a cell of the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "camelCase")]
pub enum KnownBound {
    /// Squares: exactly `k`.
    Exact(usize),
    /// Higher powers over two or more letters: at least 2, or 3 for odd
    /// multiples of 3.
    AtLeast(usize),
    Unknown,
}

impl KnownBound {
    pub fn for_cell(r: usize, k: usize, t: usize) -> Self {
        if t != 1 {
            KnownBound::Unknown
        } else if r == 2 {
            KnownBound::Exact(k)
        } else if k >= 2 {
            if r % 2 == 1 && r % 3 == 0 {
                KnownBound::AtLeast(3)
            } else {
                KnownBound::AtLeast(2)
            }
        } else {
            KnownBound::Unknown
        }
    }
}

/// How a cell's search result relates to the known bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CellStatus {
    Matches,
    /// Above a known lower bound: a new, length-bounded certificate.
    Exceeds,
    /// Above an exact value. Indicates a bug.
    Violates,
    /// Below the known value, typically because `max_len` is too short for
    /// the known construction.
    Below,
    NoReference,
    /// The budget ran out before the cell finished.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableRow {
    pub r: usize,
    pub k: usize,
    pub best_count: usize,
    pub exhaustive: bool,
    pub witness: Option<PartialWord>,
    pub nodes_explored: u64,
    pub known: KnownBound,
    pub status: CellStatus,
}

fn classify(best: usize, exhaustive: bool, known: KnownBound) -> CellStatus {
    match known {
        KnownBound::Exact(v) if best > v => CellStatus::Violates,
        KnownBound::AtLeast(v) if best > v => CellStatus::Exceeds,
        _ if !exhaustive => CellStatus::Incomplete,
        KnownBound::Exact(v) | KnownBound::AtLeast(v) if best == v => CellStatus::Matches,
        KnownBound::Exact(_) | KnownBound::AtLeast(_) => CellStatus::Below,
        KnownBound::Unknown => CellStatus::NoReference,
    }
}

/// Runs [`search_max_powers`] for every `(r, k)` cell and compares each
/// result with the known bound.
pub fn lower_bound_table(
    r_range: std::ops::RangeInclusive<usize>,
    k_range: std::ops::RangeInclusive<usize>,
    max_len: usize,
    t: usize,
    opts: &SearchOptions,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for r in r_range {
        for k in k_range.clone() {
            let query = SearchQuery::new(r, k, max_len)?
                .with_t(t)
                .with_witness_cap(1);
            let result = search_max_powers(&query, opts)?;
            let known = KnownBound::for_cell(r, k, t);
            rows.push(TableRow {
                r,
                k,
                best_count: result.best_count,
                exhaustive: result.exhaustive,
                witness: result.witnesses.into_iter().next(),
                nodes_explored: result.nodes_explored,
                known,
                status: classify(result.best_count, result.exhaustive, known),
            });
        }
    }
    Ok(rows)
}
