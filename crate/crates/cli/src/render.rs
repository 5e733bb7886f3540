//! Human-readable text output.

use std::fmt::Write;

use pword::powers::{enumerate_roots, PowerProfile};
use pword::search::{KnownBound, SearchResult, TableRow};
use pword::verify::VerificationReport;

fn join(items: impl IntoIterator<Item = impl ToString>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(" ")
    }
}

pub fn profile(p: &PowerProfile) -> String {
    let w = &p.word;
    let mut s = String::new();
    let _ = writeln!(s, "word      {w}");
    let _ = writeln!(s, "length    {}", w.len());
    let _ = writeln!(s, "alphabet  {}", w.alphabet().size());
    let _ = writeln!(s, "r         {}", p.exponent);
    let _ = writeln!(s, "defined   {}", join(w.defined_positions()));
    let _ = writeln!(s, "holes     {}", join(w.hole_positions()));
    let _ = writeln!(s, "powers    {}", p.count());
    for o in &p.occurrences {
        let factor = w.factor(o.start, o.end()).expect("occurrence inside word");
        let roots = enumerate_roots(&factor, p.exponent, 1).expect("occurrence is a power");
        let total = roots
            .total
            .map_or_else(|| "overflow".to_string(), |n| n.to_string());
        let _ = writeln!(
            s,
            "  ({}, {})  {factor}  root {} ({total} roots)",
            o.start, o.length, roots.roots[0]
        );
    }
    let _ = writeln!(s, "starts    {}", join(&p.start_positions));
    let _ = match p.unique_start {
        Some(i) => writeln!(s, "unique    yes, position {i}"),
        None => writeln!(s, "unique    no"),
    };
    s
}

fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn report(r: &VerificationReport, color: bool) -> String {
    let claim = serde_json::to_value(r.claim).expect("serializable");
    let params: Vec<String> = r
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={}", plain(v)))
        .collect();
    let verdict = if r.passed() {
        paint("PASS", "32", color)
    } else {
        paint("FAIL", "31", color)
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} {}: {verdict} ({} instances, {} ms)",
        plain(&claim),
        params.join(" "),
        r.instances_checked,
        r.elapsed_ms
    );
    for (k, v) in &r.observations {
        let _ = writeln!(s, "  {k}: {}", plain(v));
    }
    if let Some(cex) = &r.counterexample {
        let _ = writeln!(s, "  counterexample: {}", cex.word);
        for (k, v) in &cex.context {
            let _ = writeln!(s, "    {k}: {v}");
        }
    }
    s
}

fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn search(r: &SearchResult) -> String {
    let q = &r.query;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "r={} k={} maxLen={} t={}",
        q.r, q.k, q.max_len, q.t
    );
    let _ = writeln!(s, "best count            {}", r.best_count);
    let _ = writeln!(
        s,
        "exhaustive            {}",
        if r.exhaustive { "yes" } else { "no (lower bound)" }
    );
    let _ = writeln!(s, "nodes explored        {}", r.nodes_explored);
    let _ = writeln!(s, "pruned by symmetry    {}", r.pruned_by_symmetry);
    let _ = writeln!(s, "pruned by start bound {}", r.pruned_by_start_bound);
    let _ = writeln!(s, "witnesses");
    for w in &r.witnesses {
        let _ = writeln!(s, "  {w}");
    }
    s
}

fn known(k: &KnownBound) -> String {
    match k {
        KnownBound::Exact(v) => format!("={v}"),
        KnownBound::AtLeast(v) => format!(">={v}"),
        KnownBound::Unknown => "?".to_string(),
    }
}

fn status(row: &TableRow) -> String {
    plain(&serde_json::to_value(row.status).expect("serializable"))
}

pub fn table_text(rows: &[TableRow], max_len: usize, t: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "maxLen={max_len} t={t}");
    let _ = writeln!(
        s,
        "{:>3} {:>3} {:>5} {:>6} {:>12} {:>12}  {}",
        "r", "k", "best", "known", "status", "nodes", "witness"
    );
    for row in rows {
        let witness = row
            .witness
            .as_ref()
            .map_or_else(|| "-".to_string(), |w| w.to_string());
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>5} {:>6} {:>12} {:>12}  {}",
            row.r,
            row.k,
            row.best_count,
            known(&row.known),
            status(row),
            row.nodes_explored,
            witness
        );
    }
    s
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("r,k,best,exhaustive,known,status,nodes,witness\n");
    for row in rows {
        let witness = row.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            row.r,
            row.k,
            row.best_count,
            row.exhaustive,
            known(&row.known),
            status(row),
            row.nodes_explored,
            witness
        );
    }
    s
}
