use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lexorder_core::books;
use lexorder_core::corpus::Format;
use lexorder_core::measures::GroupBy;
use lexorder_core::transforms::OrderScope;
use lexorder_cli::config::{RunConfig, Truncate};
use lexorder_cli::oracle::{OracleConfig, OracleReport};
use lexorder_cli::report::StatsOptions;
use lexorder_cli::synth::{SynthKind, SynthOptions};
use lexorder_cli::{analyze, exit, oracle, report, synth};

#[derive(Parser)]
#[command(name = "lexorder", version, about = "Word order vs. word structure information in parallel texts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure h_original, h_order and h_structure for every book
    Analyze(AnalyzeArgs),
    /// Fits, correlation matrix and rank tables from a results file
    Stats(StatsArgs),
    /// Compare the fast match-length index with brute force
    OracleCheck(OracleArgs),
    /// Write a synthetic corpus in the TSV format
    Synth(SynthArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Pbc,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Verse,
    Book,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Translation,
    Language,
}

impl From<GroupArg> for GroupBy {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Translation => GroupBy::Translation,
            GroupArg::Language => GroupBy::Language,
        }
    }
}

fn parse_books(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|b| books::parse(b).with_context(|| format!("unknown book {b:?}")))
        .collect()
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Corpus files; the file name (minus .txt/.tsv) is the translation id
    inputs: Vec<PathBuf>,
    /// Load every setting from a config or manifest.json (other flags ignored)
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "pbc")]
    format: FormatArg,
    /// Comma-separated book ids or names
    #[arg(long, default_value = "40,41,42,43,44,66")]
    books: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    replicates: u32,
    #[arg(long, value_enum, default_value = "off")]
    truncate: Truncate,
    #[arg(long, value_enum, default_value = "verse")]
    order_scope: ScopeArg,
    #[arg(long, value_enum, default_value = "language")]
    group_by: GroupArg,
    /// Keep verses in canonical order (sensitivity analysis)
    #[arg(long)]
    no_verse_shuffle: bool,
    /// Apply Unicode default lowercasing to verse text
    #[arg(long)]
    lowercase: bool,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    /// results.csv written by `analyze`
    results: PathBuf,
    #[arg(long, value_enum, default_value = "language")]
    group_by: GroupArg,
    #[arg(long, default_value = "40,41,42,43,44,66")]
    books: String,
    /// Fit d_structure = c / d_order (no intercept)
    #[arg(long)]
    constrained: bool,
    #[arg(long, default_value_t = 60)]
    max_agreement_tables: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    min_len: usize,
    #[arg(long, default_value_t = 2000)]
    max_len: usize,
    #[arg(long, default_value_t = 2)]
    min_alphabet: u32,
    #[arg(long, default_value_t = 30)]
    max_alphabet: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    kind: SynthKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of symbols (iid, markov)
    #[arg(long, default_value_t = 100_000)]
    length: usize,
    #[arg(long, default_value_t = 4)]
    alphabet: usize,
    /// Self-transition probability (markov)
    #[arg(long, default_value_t = 0.9)]
    stay: f64,
    /// Sentences (positional, affixal)
    #[arg(long, default_value_t = 2000)]
    sentences: usize,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_analyze(args: AnalyzeArgs) -> Result<u8> {
    let cfg = match &args.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig {
            inputs: args.inputs,
            format: match args.format {
                FormatArg::Pbc => Format::Pbc,
                FormatArg::Tsv => Format::Tsv,
            },
            books: parse_books(&args.books)?,
            seed: args.seed,
            replicates: args.replicates,
            truncate: args.truncate,
            order_scope: match args.order_scope {
                ScopeArg::Verse => OrderScope::Verse,
                ScopeArg::Book => OrderScope::Book,
            },
            group_by: args.group_by.into(),
            verse_shuffle: !args.no_verse_shuffle,
            lowercase: args.lowercase,
            workers: args.workers,
            out: args.out,
        },
    };
    let outcome = analyze::run(&cfg)?;
    analyze::write_outputs(&outcome, &cfg.out)?;
    eprintln!(
        "{} rows, {} errors -> {}",
        outcome.manifest.rows,
        outcome.manifest.errors.len(),
        cfg.out.join("results.csv").display()
    );
    Ok(outcome.exit_code())
}

fn run_stats(args: StatsArgs) -> Result<u8> {
    let opts = StatsOptions {
        group_by: args.group_by.into(),
        books: parse_books(&args.books)?,
        constrained: args.constrained,
        max_agreement_tables: args.max_agreement_tables,
    };
    let rep = report::run(&args.results, &opts, &args.out)?;
    for n in &rep.notices {
        eprintln!("notice: {n}");
    }
    for p in &rep.written {
        eprintln!("wrote {}", p.display());
    }
    Ok(exit::OK)
}

fn run_oracle(args: OracleArgs) -> Result<u8> {
    let cfg = OracleConfig {
        count: args.count,
        min_len: args.min_len,
        max_len: args.max_len,
        min_alphabet: args.min_alphabet,
        max_alphabet: args.max_alphabet,
        seed: args.seed,
    };
    Ok(match oracle::check(&cfg) {
        OracleReport::Pass { cases } => {
            println!("PASS: {cases} cases, fast and naive match lengths agree");
            exit::OK
        }
        OracleReport::Vacuous => {
            eprintln!("warning: no cases requested");
            println!("PASS (vacuous): 0 cases");
            exit::OK
        }
        OracleReport::Fail {
            case,
            input,
            fast,
            naive,
        } => {
            println!("FAIL at case {case}");
            println!("  input: {input:?}");
            println!("  fast:  {fast:?}");
            println!("  naive: {naive:?}");
            exit::PARTIAL
        }
    })
}

fn run_synth(args: SynthArgs) -> Result<u8> {
    let opts = SynthOptions {
        kind: args.kind,
        seed: args.seed,
        length: args.length,
        alphabet: args.alphabet,
        stay: args.stay,
        sentences: args.sentences,
        ..Default::default()
    };
    let text = synth::render(&opts)?;
    match args.out {
        Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Stats(a) => run_stats(a),
        Command::OracleCheck(a) => run_oracle(a),
        Command::Synth(a) => run_synth(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::FATAL)
        }
    }
}
