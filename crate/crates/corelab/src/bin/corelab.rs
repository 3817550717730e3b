//! Command-line front end: counting, enumeration, the core↔path map,
//! verification sweeps, Hasse diagrams, and count tables.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use corelab::bijections::{core_to_path, path_to_core};
use corelab::harness::{
    emit_hasse, report_csv, report_json, report_text, run_sweep, Suite, SweepConfig,
    VerificationReport, WhichPoset,
};
use corelab::limits::SearchLimit;
use corelab::oracle::enumerate_sc_cores;
use corelab::partitions::{from_diagonal_hooks, Partition};
use corelab::paths::{count_symmetric_dyck, enumerate_symmetric_dyck, WordJson};
use corelab::posets::{
    count_admissible_ideals, count_nice_ideals, enumerate_admissible_ideals,
    enumerate_nice_ideals, IdealJson,
};
use corelab::{Error, Result};

#[derive(Parser)]
#[command(name = "corelab", version, about = "Self-conjugate core partitions, order ideals, symmetric Dyck paths, and the verified bijections between them")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count objects of one kind at a single (s, k)
    Count(CountArgs),
    /// List objects of one kind at a single (s, k)
    Enumerate(CountArgs),
    /// Map a core partition to its symmetric Dyck word, or back
    Map(MapArgs),
    /// Run verification suites over a sweep of (s, k) cells
    Verify(VerifyArgs),
    /// Emit the Hasse diagram of P(s,k) or P'(s,k) as DOT
    Hasse(HasseArgs),
    /// Emit the four-count table over a sweep as CSV or JSON
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    ScCores,
    NiceIdeals,
    AdmissibleIdeals,
    SymDyck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    k: u32,
    /// Which family to count or list
    #[arg(long, value_enum)]
    what: What,
    /// For sc-cores: use the brute-force oracle instead of the ideal route
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ListFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// core partition → symmetric Dyck word
    Forward,
    /// symmetric Dyck word → core partition
    Inverse,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    direction: Direction,
    /// Input JSON path; stdin when omitted
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Equinumerosity,
    Roundtrip,
    Structure,
    Golden,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    /// Single s (shorthand for --s-range N..N)
    #[arg(long, conflicts_with = "s_range")]
    s: Option<u32>,
    /// Inclusive range A..B
    #[arg(long, value_parser = parse_range)]
    s_range: Option<(u32, u32)>,
    /// Single k (shorthand for --k-range N..N)
    #[arg(long, conflicts_with = "k_range")]
    k: Option<u32>,
    /// Inclusive range A..B
    #[arg(long, value_parser = parse_range)]
    k_range: Option<(u32, u32)>,
    /// Per-cell time budget in seconds (default 60, or CORELAB_BUDGET_SECS)
    #[arg(long)]
    budget_secs: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    /// Suites to run; may be repeated
    #[arg(long, value_enum, default_values_t = vec![SuiteArg::All])]
    suite: Vec<SuiteArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    /// the odd-integer poset P(s,k)
    P,
    /// the planar poset P'(s,k)
    PPrime,
}

#[derive(Args)]
struct HasseArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "p")]
    which: WhichArg,
    /// Only `dot` is meaningful here
    #[arg(long, default_value = "dot")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(text: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {text:?}"))?;
    let lo: u32 = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: u32 = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn budget_from(args: &SweepArgs) -> Duration {
    let secs = args
        .budget_secs
        .or_else(|| std::env::var("CORELAB_BUDGET_SECS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(60);
    Duration::from_secs(secs)
}

fn sweep_config(args: &SweepArgs, suites: Vec<Suite>) -> SweepConfig {
    let default = SweepConfig::default();
    SweepConfig {
        s_range: args.s.map(|s| (s, s)).or(args.s_range).unwrap_or(default.s_range),
        k_range: args.k.map(|k| (k, k)).or(args.k_range).unwrap_or(default.k_range),
        budget: budget_from(args),
        suites,
        workers: default.workers,
    }
}

fn run_count(args: &CountArgs) -> Result<()> {
    let lim = SearchLimit::default();
    let (what, n) = match (args.what, args.oracle) {
        (What::ScCores, true) => {
            ("sc-cores", enumerate_sc_cores(args.s, args.k, &lim)?.0.len() as u64)
        }
        (What::ScCores, false) => ("sc-cores", count_nice_ideals(args.s, args.k, &lim)?),
        (What::NiceIdeals, _) => ("nice-ideals", count_nice_ideals(args.s, args.k, &lim)?),
        (What::AdmissibleIdeals, _) => {
            ("admissible-ideals", count_admissible_ideals(args.s, args.k, &lim)?)
        }
        (What::SymDyck, _) => ("sym-dyck", count_symmetric_dyck(args.s, args.k, &lim)?),
    };
    let text = match args.format {
        ListFormat::Text => format!("{n}\n"),
        ListFormat::Json => format!(
            "{}\n",
            serde_json::json!({ "s": args.s, "k": args.k, "what": what, "count": n })
        ),
    };
    write_out(&args.out, &text)
}

fn run_enumerate(args: &CountArgs) -> Result<()> {
    let lim = SearchLimit::default();
    let (s, k) = (args.s, args.k);
    let (text, json) = match args.what {
        What::ScCores => {
            let cores: Vec<Partition> = if args.oracle {
                enumerate_sc_cores(s, k, &lim)?.0
            } else {
                let mut cores: Vec<Partition> = enumerate_nice_ideals(s, k, &lim)?
                    .iter()
                    .map(from_diagonal_hooks)
                    .collect();
                cores.sort_by(|a, b| (a.size(), a.parts()).cmp(&(b.size(), b.parts())));
                cores
            };
            let text = cores.iter().map(|c| format!("{c}\n")).collect::<String>();
            (text, serde_json::to_value(&cores)?)
        }
        What::NiceIdeals => {
            let ideals = enumerate_nice_ideals(s, k, &lim)?;
            let text = ideals
                .iter()
                .map(|i| format!("{:?}\n", i.values()))
                .collect::<String>();
            (text, serde_json::to_value(&ideals)?)
        }
        What::AdmissibleIdeals => {
            let ideals: Vec<IdealJson> = enumerate_admissible_ideals(s, k, &lim)?
                .into_iter()
                .map(|pts| IdealJson::new(s, k, pts))
                .collect();
            let text = ideals
                .iter()
                .map(|i| format!("{}\n", serde_json::to_string(&i.elements).unwrap_or_default()))
                .collect::<String>();
            (text, serde_json::to_value(&ideals)?)
        }
        What::SymDyck => {
            let words = enumerate_symmetric_dyck(s, k, &lim)?;
            let text = words.iter().map(|w| format!("{w}\n")).collect::<String>();
            let json: Vec<WordJson> =
                words.iter().map(WordJson::from_word).collect::<Result<_>>()?;
            (text, serde_json::to_value(&json)?)
        }
    };
    match args.format {
        ListFormat::Text => write_out(&args.out, &text),
        ListFormat::Json => {
            write_out(&args.out, &format!("{}\n", serde_json::to_string_pretty(&json)?))
        }
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String> {
    match input {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn run_map(args: &MapArgs) -> Result<()> {
    let payload = read_input(&args.input)?;
    match args.direction {
        Direction::Forward => {
            let lambda: Partition = serde_json::from_str(&payload)?;
            let word = core_to_path(args.s, args.k, &lambda)?;
            let json = WordJson::from_word(&word)?;
            write_out(&args.out, &format!("{}\n", serde_json::to_string(&json)?))
        }
        Direction::Inverse => {
            let json: WordJson = serde_json::from_str(&payload)?;
            if json.s != args.s || json.k != args.k {
                return Err(Error::Parse(format!(
                    "payload is for (s,k) = ({},{}) but flags say ({},{})",
                    json.s, json.k, args.s, args.k
                )));
            }
            let lambda = path_to_core(args.s, args.k, &json.to_word()?)?;
            write_out(&args.out, &format!("{}\n", serde_json::to_string(&lambda)?))
        }
    }
}

fn emit_report(
    report: &VerificationReport,
    format: ReportFormat,
    out: &Option<PathBuf>,
) -> Result<()> {
    let text = match format {
        ReportFormat::Text => report_text(report),
        ReportFormat::Csv => report_csv(report),
        ReportFormat::Json => format!("{}\n", report_json(report)?),
    };
    write_out(out, &text)
}

fn run_verify(args: &VerifyArgs) -> Result<bool> {
    let mut suites = Vec::new();
    for s in &args.suite {
        match s {
            SuiteArg::Equinumerosity => suites.push(Suite::Equinumerosity),
            SuiteArg::Roundtrip => suites.push(Suite::Roundtrip),
            SuiteArg::Structure => suites.push(Suite::Structure),
            SuiteArg::Golden => suites.push(Suite::Golden),
            SuiteArg::All => suites.extend([
                Suite::Golden,
                Suite::Equinumerosity,
                Suite::Roundtrip,
                Suite::Structure,
            ]),
        }
    }
    suites.dedup();
    let report = run_sweep(&sweep_config(&args.sweep, suites));
    emit_report(&report, args.format, &args.sweep.out)?;
    Ok(report.all_pass())
}

fn run_table(args: &TableArgs) -> Result<bool> {
    let report = run_sweep(&sweep_config(&args.sweep, vec![Suite::Equinumerosity]));
    emit_report(&report, args.format, &args.sweep.out)?;
    Ok(report.all_pass())
}

fn run_hasse(args: &HasseArgs) -> Result<()> {
    if args.format != "dot" {
        return Err(Error::Parse(format!("hasse only emits dot, not {}", args.format)));
    }
    let which = match args.which {
        WhichArg::P => WhichPoset::Core,
        WhichArg::PPrime => WhichPoset::Planar,
    };
    write_out(&args.out, &emit_hasse(args.s, args.k, which))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Count(args) => run_count(args).map(|()| true),
        Cmd::Enumerate(args) => run_enumerate(args).map(|()| true),
        Cmd::Map(args) => run_map(args).map(|()| true),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Hasse(args) => run_hasse(args).map(|()| true),
        Cmd::Table(args) => run_table(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
