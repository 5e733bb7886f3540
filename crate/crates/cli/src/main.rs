//! `pword`: analyze, construct, verify and search powers in partial words.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage, parse or
//! resource error.

mod render;

use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pword::powers::PowerProfile;
use pword::search::{self, SearchOptions, SearchQuery};
use pword::verify::{self, Construction, VerificationReport, VerifyConfig};
use pword::{constructions, Alphabet, Error, Exponent, PartialWord};

#[derive(Parser)]
#[command(name = "pword", version, about = "Powers in partial words")]
struct Cli {
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for verify and search
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Instance budget for verify, node budget for search
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Colored text output
    #[arg(long, global = true, value_enum, default_value_t = ColorChoice::Auto)]
    color: ColorChoice,

    /// Log search progress to stderr
    #[arg(long, global = true)]
    progress: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorChoice {
    Auto,
    Always,
    Never,
}

#[derive(Subcommand)]
enum Command {
    /// Print the r-th power occurrences of words (holes written as `.`)
    Analyze(AnalyzeArgs),
    /// Print one of the explicit constructions
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Exhaustively check a statement on a bounded instance space
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Maximum number of r-th powers with at most t start positions
    Search(SearchArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Words to analyze
    words: Vec<String>,
    /// Exponent
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Alphabet size; defaults to one more than the largest letter used
    #[arg(long)]
    alphabet: Option<usize>,
    /// Read words from stdin, one per line
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// ◊ followed by the chain w_{i+1} = w_i a_{i+1} w_i[2..]
    SquareChain {
        #[arg(long)]
        k: usize,
    },
    /// ◊^{r-1} aba ◊^{r-2}
    Prop2 {
        #[arg(long)]
        r: usize,
    },
    /// ◊^{r-1} aba ◊^{r-2} baa ◊^{r-3}, for odd multiples of 3
    Prop3 {
        #[arg(long)]
        r: usize,
        /// Emit the formula for any r >= 3 (unverified outside odd multiples of 3)
        #[arg(long)]
        unchecked: bool,
    },
    /// The two binary words with three cubes starting at position 1
    CubeExamples,
}

#[derive(Subcommand)]
enum VerifyCmd {
    FineWilf {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
    },
    CorollaryFull {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
    },
    LemmaH1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
    },
    #[command(name = "lemma-2k")]
    Lemma2k {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_u_len: usize,
    },
    LemmaShort {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_u_len: usize,
    },
    TheoremSq {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
    },
    Construction {
        #[arg(long, value_enum)]
        name: ConstructionName,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        unchecked: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionName {
    SquareChain,
    Prop2,
    Prop3,
    CubeExamples,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct SearchArgs {
    #[command(subcommand)]
    table: Option<SearchCmd>,
    #[arg(long, required = true)]
    r: Option<usize>,
    #[arg(long, required = true)]
    k: Option<usize>,
    #[arg(long, required = true)]
    max_len: Option<usize>,
    /// Most positions allowed to start a power
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = search::DEFAULT_WITNESS_CAP)]
    witness_cap: usize,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Search every (r, k) cell of a grid
    Table {
        #[arg(long)]
        r_min: usize,
        #[arg(long)]
        r_max: usize,
        #[arg(long)]
        k_min: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// CSV instead of aligned text
        #[arg(long)]
        csv: bool,
    },
}

/// Failures mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Output {
    json: bool,
    color: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
        let mut stdout = io::stdout().lock();
        if self.json {
            let doc = serde_json::to_string_pretty(value).expect("serializable");
            writeln!(stdout, "{doc}")?;
        } else {
            write!(stdout, "{}", text())?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.progress { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let color = match cli.color {
        ColorChoice::Always => true,
        ColorChoice::Never => false,
        ColorChoice::Auto => io::stdout().is_terminal(),
    };
    let out = Output {
        json: cli.json,
        color: color && !cli.json,
    };
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));

    let result = match cli.command {
        Command::Analyze(args) => analyze(args, &out),
        Command::Construct(cmd) => construct(cmd, &out),
        Command::Verify(cmd) => {
            let cfg = VerifyConfig {
                budget: cli.budget.unwrap_or(verify::DEFAULT_BUDGET),
                jobs,
            };
            run_verify(cmd, &cfg, &out)
        }
        Command::Search(args) => {
            let opts = SearchOptions {
                budget: cli.budget.unwrap_or(search::DEFAULT_BUDGET),
                jobs,
                prune: true,
            };
            run_search(args, &opts, &out)
        }
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let msg = match failure {
                Failure::Usage(msg) => msg,
                Failure::Core(e) => e.to_string(),
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                Failure::Io(e) => e.to_string(),
            };
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn analyze(args: AnalyzeArgs, out: &Output) -> Result<ExitCode, Failure> {
    let r = Exponent::new(args.r)?;
    let alphabet = args.alphabet.map(Alphabet::new).transpose()?;
    let mut texts = args.words;
    if args.stdin {
        for line in io::stdin().lock().lines() {
            let line = line?;
            let line = line.trim();
            if !line.is_empty() {
                texts.push(line.to_string());
            }
        }
    }
    if texts.is_empty() {
        return Err(Failure::Usage("no words given".into()));
    }
    let mut profiles = Vec::with_capacity(texts.len());
    for text in &texts {
        let word = match alphabet {
            Some(a) => PartialWord::parse(text, a),
            None => PartialWord::parse_inferred(text),
        }
        .map_err(|e| Failure::Usage(format!("{text:?}: {e}")))?;
        profiles.push(PowerProfile::of(&word, r));
    }
    let text = || {
        profiles
            .iter()
            .map(render::profile)
            .collect::<Vec<_>>()
            .join("\n")
    };
    if profiles.len() == 1 {
        out.emit(&profiles[0], text)?;
    } else {
        out.emit(&profiles, text)?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ConstructDoc {
    name: &'static str,
    words: Vec<PartialWord>,
    unchecked: bool,
}

fn construct(cmd: ConstructCmd, out: &Output) -> Result<ExitCode, Failure> {
    let (name, words, unchecked) = match cmd {
        ConstructCmd::SquareChain { k } => ("square-chain", vec![constructions::square_chain(k)?], false),
        ConstructCmd::Prop2 { r } => ("prop2", vec![constructions::two_power_word(r)?], false),
        ConstructCmd::Prop3 { r, unchecked } => {
            let w = if unchecked {
                constructions::three_power_word_unchecked(r)?
            } else {
                constructions::three_power_word(r)?
            };
            ("prop3", vec![w], unchecked)
        }
        ConstructCmd::CubeExamples => ("cube-examples", constructions::cube_examples(), false),
    };
    let doc = ConstructDoc {
        name,
        words,
        unchecked,
    };
    out.emit(&doc, || {
        let mut s = String::new();
        if doc.unchecked {
            s.push_str("# unchecked: r is outside the proven family\n");
        }
        for w in &doc.words {
            s.push_str(&format!("{w}\n"));
        }
        s
    })?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(cmd: VerifyCmd, cfg: &VerifyConfig, out: &Output) -> Result<ExitCode, Failure> {
    let report: VerificationReport = match cmd {
        VerifyCmd::FineWilf { k, max_len } => verify::verify_fine_wilf(k, max_len, cfg)?,
        VerifyCmd::CorollaryFull { r, k, max_len } => {
            verify::verify_corollary_full(r, k, max_len, cfg)?
        }
        VerifyCmd::LemmaH1 { k, max_len } => verify::verify_lemma_h1(k, max_len, cfg)?,
        VerifyCmd::Lemma2k { k, max_u_len } => verify::verify_lemma_2k(k, max_u_len, cfg)?,
        VerifyCmd::LemmaShort { k, max_u_len } => verify::verify_lemma_short(k, max_u_len, cfg)?,
        VerifyCmd::TheoremSq { k, max_len } => verify::verify_theorem_sq(k, max_len, cfg)?,
        VerifyCmd::Construction {
            name,
            k,
            r,
            unchecked,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| Failure::Usage(format!("construction needs --{flag}")))
            };
            let which = match name {
                ConstructionName::SquareChain => Construction::SquareChain { k: need(k, "k")? },
                ConstructionName::Prop2 => Construction::Prop2 { r: need(r, "r")? },
                ConstructionName::Prop3 => Construction::Prop3 {
                    r: need(r, "r")?,
                    unchecked,
                },
                ConstructionName::CubeExamples => Construction::CubeExamples,
            };
            verify::verify_construction(which)?
        }
    };
    out.emit(&report, || render::report(&report, out.color))?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_search(args: SearchArgs, opts: &SearchOptions, out: &Output) -> Result<ExitCode, Failure> {
    if let Some(SearchCmd::Table {
        r_min,
        r_max,
        k_min,
        k_max,
        max_len,
        t,
        csv,
    }) = args.table
    {
        let rows = search::lower_bound_table(r_min..=r_max, k_min..=k_max, max_len, t, opts)?;
        out.emit(&rows, || {
            if csv {
                render::table_csv(&rows)
            } else {
                render::table_text(&rows, max_len, t)
            }
        })?;
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(r), Some(k), Some(max_len)) = (args.r, args.k, args.max_len) else {
        return Err(Failure::Usage("search needs --r, --k and --max-len".into()));
    };
    let query = SearchQuery::new(r, k, max_len)?
        .with_t(args.t)
        .with_witness_cap(args.witness_cap);
    query.validate()?;
    let result = search::search_max_powers(&query, opts)?;
    out.emit(&result, || render::search(&result))?;
    if result.exhaustive {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: node budget exhausted; best count is a lower bound only");
        Ok(ExitCode::from(2))
    }
}
