//! `sudoku-chroma`: command-line front end.
//!
//! Exit codes:
//!
//! | command | 0 | 1 | 2 |
//! |---------|---|---|---|
//! | `count` | Zero | ExactlyOne | AtLeast |
//! | `check` | PASS | FAIL | |
//! | `suite` | all match | some mismatch or error | |
//!
//! Other failures: 64 usage, 65 bad input data, 66 unreadable input,
//! 69 search limit exceeded, 74 output error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sudoku_chroma::coloring::{chromatic_number, count_extensions, ExtensionCount, PartialColoring};
use sudoku_chroma::graph::{emit_edgelist, parse_edgelist, parse_graph6, FamilySpec, Graph};
use sudoku_chroma::search::{sudoku_number_with, SearchConfig, SnResult, SudokuCertificate};
use sudoku_chroma::theorems::{run_suite, CheckReport, Manifest, SuiteConfig, Verdict};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_UNAVAILABLE: u8 = 69;
const EX_IOERR: u8 = 74;

#[derive(Parser)]
#[command(
    name = "sudoku-chroma",
    version,
    about = "Unique extensions of partial colourings and exact Sudoku numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file (`n m` header, then one `u v` per line); `.g6` files are read as graph6.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Family spec such as `path:6`, `kmn:3,4` or `attach:path:6@2-3:K5`.
    #[arg(long)]
    family: Option<String>,
    /// Seed for `random:` families that do not carry their own.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edge list of a named family.
    Gen {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        output: Output,
    },
    /// Count proper extensions of a partial colouring, up to a cap.
    Count {
        #[command(flatten)]
        input: GraphInput,
        /// Partial colouring file, one `vertex colour` pair per line.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        cap: u64,
    },
    /// Compute sn(G, k) with a certificate.
    Sn {
        #[command(flatten)]
        input: GraphInput,
        /// Colour budget; defaults to the chromatic number.
        #[arg(long)]
        k: Option<usize>,
        /// Largest number of vertices the subset search may range over.
        #[arg(long, env = "SUDOKU_CHROMA_LIMIT", default_value_t = 14)]
        limit: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Re-verify a certificate produced by `sn --format json`.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Run a manifest of checks and report predicted against computed values.
    Suite {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, env = "SUDOKU_CHROMA_LIMIT", default_value_t = 14)]
        limit: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report 0 ms for every instance so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())).into())
}

/// An input file that could not be read.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.graph, &input.family) {
        (Some(path), None) => {
            let text = read(path)?;
            let g = if path.extension().is_some_and(|e| e == "g6") {
                parse_graph6(text.lines().find(|l| !l.trim().is_empty()).unwrap_or(""))
            } else {
                parse_edgelist(&text)
            };
            Ok(g.with_context(|| format!("in {}", path.display()))?)
        }
        (None, Some(spec)) => {
            let mut spec: FamilySpec = spec.parse()?;
            if let (FamilySpec::Random { seed, .. }, Some(s)) = (&mut spec, input.seed) {
                seed.get_or_insert(s);
            }
            Ok(spec.build()?)
        }
        _ => bail!(UsageError("give exactly one of --graph or --family".into())),
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn gen(input: &GraphInput, output: &Output) -> Result<u8> {
    let g = load_graph(input)?;
    let text = match output.format {
        Format::Text => emit_edgelist(&g),
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            serde_json::json!({ "n": g.order(), "edges": edges }).to_string() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in g.edges() {
                writeln!(s, "{u},{v}")?;
            }
            s
        }
    };
    emit(output, &text)?;
    Ok(0)
}

fn count(input: &GraphInput, coloring: &Path, k: usize, cap: u64) -> Result<u8> {
    let g = load_graph(input)?;
    let c = PartialColoring::parse(&read(coloring)?, k).with_context(|| format!("in {}", coloring.display()))?;
    let result = count_extensions(&g, &c, cap)?;
    println!("{result}");
    Ok(match result {
        ExtensionCount::Zero => 0,
        ExtensionCount::ExactlyOne => 1,
        ExtensionCount::AtLeast(_) => 2,
    })
}

fn render_sn(r: &SnResult, format: Format) -> Result<String> {
    let cert = &r.certificate;
    Ok(match format {
        Format::Json => cert.to_json() + "\n",
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sn = {} (k = {}, n = {})", r.sn, cert.k, cert.n)?;
            let pairs = |p: &[(usize, usize)]| p.iter().map(|(v, c)| format!("{v}:{c}")).collect::<Vec<_>>().join(" ");
            writeln!(s, "S  = {:?}", cert.s)?;
            writeln!(s, "C0 = {}", pairs(&cert.c0))?;
            writeln!(s, "F  = {}", pairs(&cert.f))?;
            s
        }
        Format::Csv => {
            let mut s = String::from("vertex,in_s,c0,f\n");
            for &(v, f) in &cert.f {
                let c0 = cert
                    .c0
                    .iter()
                    .find(|p| p.0 == v)
                    .map(|p| p.1.to_string())
                    .unwrap_or_default();
                writeln!(s, "{v},{},{c0},{f}", cert.s.contains(&v))?;
            }
            s
        }
    })
}

fn sn(input: &GraphInput, k: Option<usize>, limit: usize, threads: usize, output: &Output) -> Result<u8> {
    let g = load_graph(input)?;
    let k = k.unwrap_or_else(|| chromatic_number(&g));
    let config = SearchConfig {
        limit,
        threads,
        prune: true,
    };
    let r = sudoku_number_with(&g, k, &config)?;
    r.certificate
        .verify(&g)
        .context("internal error: the search produced a certificate that does not verify")?;
    for w in &r.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!(
        "lower bound {}, {} sets and {} colourings examined in {:.3} s",
        r.lower_bound,
        r.stats.subsets_examined,
        r.stats.colorings_examined,
        r.stats.elapsed.as_secs_f64()
    );
    emit(output, &render_sn(&r, output.format)?)?;
    Ok(0)
}

fn check(input: &GraphInput, certificate: &Path) -> Result<u8> {
    let g = load_graph(input)?;
    let cert = SudokuCertificate::from_json(&read(certificate)?)
        .with_context(|| format!("malformed certificate {}", certificate.display()))?;
    Ok(match cert.verify(&g) {
        Ok(()) => {
            println!("PASS sn <= {} (k = {})", cert.sn, cert.k);
            0
        }
        Err(why) => {
            println!("FAIL {why}");
            1
        }
    })
}

fn suite(manifest: &Path, limit: usize, threads: usize, no_timing: bool, output: &Output) -> Result<u8> {
    let manifest = Manifest::parse(&read(manifest)?).with_context(|| format!("in {}", manifest.display()))?;
    let config = SuiteConfig {
        threads,
        search: SearchConfig {
            limit,
            ..SearchConfig::default()
        },
        timing: !no_timing,
    };
    let reports = run_suite(&manifest, &config)?;
    let text = match output.format {
        Format::Csv => CheckReport::to_csv(&reports),
        Format::Json => CheckReport::to_json(&reports) + "\n",
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(s, "{r}")?;
            }
            let bad = reports.iter().filter(|r| !r.is_match()).count();
            writeln!(s, "{} instances, {} not matching", reports.len(), bad)?;
            s
        }
    };
    emit(output, &text)?;
    Ok(if reports.iter().all(|r| r.verdict == Verdict::Match) {
        0
    } else {
        1
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EX_USAGE;
    }
    if err.downcast_ref::<InputError>().is_some() {
        return EX_NOINPUT;
    }
    match err.downcast_ref::<sudoku_chroma::Error>() {
        Some(sudoku_chroma::Error::LimitExceeded { .. }) => EX_UNAVAILABLE,
        Some(_) => EX_DATAERR,
        None if err.downcast_ref::<std::io::Error>().is_some() => EX_IOERR,
        None => EX_DATAERR,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Gen { input, output } => gen(input, output),
        Command::Count {
            input,
            coloring,
            k,
            cap,
        } => count(input, coloring, *k, *cap),
        Command::Sn {
            input,
            k,
            limit,
            threads,
            output,
        } => sn(input, *k, *limit, *threads, output),
        Command::Check { input, certificate } => check(input, certificate),
        Command::Suite {
            manifest,
            limit,
            threads,
            no_timing,
            output,
        } => suite(manifest, *limit, *threads, *no_timing, output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
