//! The five subcommands. Each one returns the process exit code, with `Err`
//! reserved for hard failures (unreadable input, malformed data, bad config)
//! that the caller maps to exit 1.

use crate::artifacts::{to_pretty_json, write_atomic, BoxError, ToolInfo};
use clap::{Args, ValueEnum};
use handparse::{
    parse_stream, read_normalized, write_normalized, HandRecord, NormalizedHeader, ParseFailure,
};
use infodecomp::JointDistribution3;
use pipeline::{
    run_analysis, to_csv_string, AnalysisConfig, AnalysisReport, Variant, STANDARD_LEVELS,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;
use synthgen::{simulate_session, SimConfig};

pub const RECORDS_FILE: &str = "records.jsonl";
pub const PARSE_REPORT_FILE: &str = "parse.json";
pub const CORPUS_TEXT_FILE: &str = "corpus.txt";
pub const CORPUS_RECORDS_FILE: &str = "corpus.jsonl";
pub const SIMULATE_REPORT_FILE: &str = "simulate.json";
pub const REPORT_JSON_FILE: &str = "report.json";
pub const REPORT_CSV_FILE: &str = "report.csv";

type CmdResult = Result<ExitCode, BoxError>;

fn read_text(path: &PathBuf) -> Result<String, BoxError> {
    fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()).into())
}

// ---------------------------------------------------------------- parse ----

#[derive(Args, Debug)]
pub struct ParseArgs {
    /// Raw hand-history text files, processed in order.
    #[arg(required = true, value_name = "FILE")]
    pub inputs: Vec<PathBuf>,
    /// Directory that receives records.jsonl and parse.json.
    #[arg(long, env = "HOLDEM_PID_OUT", value_name = "DIR")]
    pub out: PathBuf,
    /// Exit with status 2 when the failed fraction exceeds this.
    #[arg(
        long,
        env = "HOLDEM_PID_FAIL_THRESHOLD",
        default_value_t = 0.10,
        value_name = "FRACTION"
    )]
    pub fail_threshold: f64,
}

/// A parse failure tagged with the file it came from.
#[derive(Serialize)]
struct FileFailure {
    file: String,
    #[serde(flatten)]
    failure: ParseFailure,
}

#[derive(Serialize)]
struct ParseInvocation {
    subcommand: &'static str,
    inputs: Vec<String>,
    fail_threshold: f64,
}

#[derive(Serialize)]
struct ParseArtifact {
    tool: ToolInfo,
    invocation: ParseInvocation,
    attempted: usize,
    parsed: usize,
    failed: usize,
    failure_fraction: f64,
    failures: Vec<FileFailure>,
}

pub fn cmd_parse(args: ParseArgs) -> CmdResult {
    let mut attempted = 0usize;
    let mut records: Vec<HandRecord> = Vec::new();
    let mut failures: Vec<FileFailure> = Vec::new();
    for path in &args.inputs {
        let text = read_text(path)?;
        let outcome = parse_stream(&text);
        let file = path.display().to_string();
        attempted += outcome.attempted;
        records.extend(outcome.records);
        failures.extend(outcome.failures.into_iter().map(|failure| FileFailure {
            file: file.clone(),
            failure,
        }));
    }
    let failed = failures.len();
    let failure_fraction = if attempted == 0 {
        0.0
    } else {
        failed as f64 / attempted as f64
    };

    let header = NormalizedHeader::with_tool_version(&ToolInfo::stamp());
    let mut jsonl = Vec::new();
    write_normalized(&mut jsonl, &header, &records)?;
    let records_path = args.out.join(RECORDS_FILE);
    write_atomic(&records_path, &jsonl)?;

    let artifact = ParseArtifact {
        tool: ToolInfo::current(),
        invocation: ParseInvocation {
            subcommand: "parse",
            inputs: args
                .inputs
                .iter()
                .map(|p| p.display().to_string())
                .collect(),
            fail_threshold: args.fail_threshold,
        },
        attempted,
        parsed: records.len(),
        failed,
        failure_fraction,
        failures,
    };
    write_atomic(
        &args.out.join(PARSE_REPORT_FILE),
        to_pretty_json(&artifact)?.as_bytes(),
    )?;

    println!(
        "parsed {} of {} hands from {} file(s); wrote {}",
        artifact.parsed,
        attempted,
        args.inputs.len(),
        records_path.display()
    );
    if failure_fraction > args.fail_threshold {
        eprintln!(
            "failure fraction {failure_fraction:.4} exceeds threshold {:.4}",
            args.fail_threshold
        );
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

// ------------------------------------------------------------- simulate ----

#[derive(Args, Debug)]
pub struct SimulateArgs {
    /// JSON simulation config; omitted fields take their defaults.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Overrides the number of hands from the config.
    #[arg(long, value_name = "N")]
    pub hands: Option<u64>,
    /// Overrides the master seed from the config.
    #[arg(long, env = "HOLDEM_PID_SEED", value_name = "SEED")]
    pub seed: Option<u64>,
    /// Directory that receives corpus.txt, corpus.jsonl and simulate.json.
    #[arg(long, env = "HOLDEM_PID_OUT", value_name = "DIR")]
    pub out: PathBuf,
}

#[derive(Serialize)]
struct SimulateInvocation {
    subcommand: &'static str,
    config_file: Option<String>,
    hands_override: Option<u64>,
    seed_override: Option<u64>,
}

#[derive(Serialize)]
struct SimulateArtifact {
    tool: ToolInfo,
    invocation: SimulateInvocation,
    /// The fully resolved config the session actually ran with.
    config: SimConfig,
    strength_cutoff: u32,
    hands_written: usize,
}

pub fn cmd_simulate(args: SimulateArgs) -> CmdResult {
    let mut config: SimConfig = match &args.config {
        Some(path) => {
            let text = read_text(path)?;
            serde_json::from_str(&text)
                .map_err(|err| format!("bad config {}: {err}", path.display()))?
        }
        None => SimConfig::default(),
    };
    if let Some(hands) = args.hands {
        config.hands = hands;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }

    let output = simulate_session(&config)?;

    write_atomic(&args.out.join(CORPUS_TEXT_FILE), output.text.as_bytes())?;
    let header = NormalizedHeader::with_tool_version(&ToolInfo::stamp());
    let mut jsonl = Vec::new();
    write_normalized(&mut jsonl, &header, &output.records)?;
    write_atomic(&args.out.join(CORPUS_RECORDS_FILE), &jsonl)?;

    let artifact = SimulateArtifact {
        tool: ToolInfo::current(),
        invocation: SimulateInvocation {
            subcommand: "simulate",
            config_file: args.config.as_ref().map(|p| p.display().to_string()),
            hands_override: args.hands,
            seed_override: args.seed,
        },
        config,
        strength_cutoff: output.strength_cutoff,
        hands_written: output.records.len(),
    };
    write_atomic(
        &args.out.join(SIMULATE_REPORT_FILE),
        to_pretty_json(&artifact)?.as_bytes(),
    )?;

    println!(
        "simulated {} hands (strength cutoff {}); wrote {}",
        artifact.hands_written,
        artifact.strength_cutoff,
        args.out.join(CORPUS_TEXT_FILE).display()
    );
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------- analyze ----

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// Every acted betting round, strength read from showdown when present.
    Main,
    /// Exactly one preflop observation per hand.
    Preflop,
    /// Only rounds whose hero strength was actually revealed.
    Showdown,
    /// Each hand observed from both seats in turn.
    BothPositions,
}

impl From<VariantArg> for Variant {
    fn from(arg: VariantArg) -> Variant {
        match arg {
            VariantArg::Main => Variant::Main,
            VariantArg::Preflop => Variant::PreflopOnly,
            VariantArg::Showdown => Variant::ShowdownOnly,
            VariantArg::BothPositions => Variant::BothPositions,
        }
    }
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Normalized record stream (records.jsonl).
    #[arg(value_name = "FILE")]
    pub input: PathBuf,
    /// Directory that receives report.json and report.csv.
    #[arg(long, env = "HOLDEM_PID_OUT", value_name = "DIR")]
    pub out: PathBuf,
    /// Which betting rounds feed the joint distributions.
    #[arg(
        long,
        value_enum,
        default_value_t = VariantArg::Main,
        env = "HOLDEM_PID_VARIANT"
    )]
    pub variant: VariantArg,
    /// Bootstrap resamples per cell.
    #[arg(
        long,
        default_value_t = 500,
        env = "HOLDEM_PID_RESAMPLES",
        value_name = "N"
    )]
    pub resamples: u32,
    /// Master seed for the bootstrap.
    #[arg(
        long,
        default_value_t = 0,
        env = "HOLDEM_PID_SEED",
        value_name = "SEED"
    )]
    pub seed: u64,
    /// Big-blind levels to analyze, in cents, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        env = "HOLDEM_PID_LEVELS",
        value_name = "CENTS,.."
    )]
    pub levels: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct AnalyzeInvocation {
    subcommand: String,
    input: String,
}

/// What report.json holds. The resolved analysis config travels inside the
/// report itself; the invocation deliberately omits the output directory so
/// reruns into different directories stay byte-identical.
#[derive(Serialize, Deserialize)]
pub struct ReportArtifact {
    tool: ToolInfo,
    invocation: AnalyzeInvocation,
    pub report: AnalysisReport,
}

fn csv_with_header(report: &AnalysisReport) -> String {
    let mut text = String::new();
    writeln!(text, "# {}", ToolInfo::stamp()).unwrap();
    writeln!(
        text,
        "# config {}",
        serde_json::to_string(&report.config).expect("config serializes")
    )
    .unwrap();
    text.push_str(&to_csv_string(report));
    text
}

pub fn cmd_analyze(args: AnalyzeArgs) -> CmdResult {
    let file = fs::File::open(&args.input)
        .map_err(|err| format!("cannot read {}: {err}", args.input.display()))?;
    let (_, records) = read_normalized(BufReader::new(file))?;

    let config = AnalysisConfig {
        variant: args.variant.into(),
        resamples: args.resamples,
        seed: args.seed,
        levels: if args.levels.is_empty() {
            STANDARD_LEVELS.to_vec()
        } else {
            args.levels.clone()
        },
        cluster_by_hand: true,
    };
    let report = run_analysis(&records, &config)?;

    let artifact = ReportArtifact {
        tool: ToolInfo::current(),
        invocation: AnalyzeInvocation {
            subcommand: "analyze".to_string(),
            input: args.input.display().to_string(),
        },
        report,
    };
    let json_path = args.out.join(REPORT_JSON_FILE);
    write_atomic(&json_path, to_pretty_json(&artifact)?.as_bytes())?;
    write_atomic(
        &args.out.join(REPORT_CSV_FILE),
        csv_with_header(&artifact.report).as_bytes(),
    )?;

    println!(
        "analyzed {} records into {} cells; wrote {}",
        records.len(),
        artifact.report.cells.len(),
        json_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------ decompose ----

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Distribution in the cell exchange format: "x y1 y2 probability" lines.
    #[arg(value_name = "FILE")]
    pub input: PathBuf,
}

/// Snaps display-only noise (|v| below the non-negativity tolerance) to zero
/// so clean inputs print clean zeros instead of "-0.000000".
fn fmt6(value: f64) -> String {
    let shown = if value.abs() < 5e-13 { 0.0 } else { value };
    format!("{shown:.6}")
}

pub fn cmd_decompose(args: DecomposeArgs) -> CmdResult {
    let text = read_text(&args.input)?;
    let dist = JointDistribution3::read_cells(&text)?;
    let parts = infodecomp::decompose(&dist);
    let specific = infodecomp::specific_decompose(&dist)?;

    println!("# {}", ToolInfo::stamp());
    println!("# input {}", args.input.display());
    println!(
        "# alphabet x={} y1={} y2={}",
        dist.nx(),
        dist.ny1(),
        dist.ny2()
    );
    let rows = [
        ("total", parts.total),
        ("redundancy", parts.redundancy),
        ("unique_y1", parts.unique_y1),
        ("unique_y2", parts.unique_y2),
        ("synergy", parts.synergy),
        ("interaction_information", parts.interaction_info),
        ("mi_y1", parts.mi_y1),
        ("mi_y2", parts.mi_y2),
    ];
    for (name, value) in rows {
        println!("{name:<24} {}", fmt6(value));
    }
    for state in &specific.states {
        println!(
            "state x={}  weight {}  total {}  redundancy {}  unique_y1 {}  unique_y2 {}  synergy {}",
            state.x,
            fmt6(state.weight),
            fmt6(state.total),
            fmt6(state.redundancy),
            fmt6(state.unique_y1),
            fmt6(state.unique_y2),
            fmt6(state.synergy),
        );
    }
    Ok(ExitCode::SUCCESS)
}

// --------------------------------------------------------------- report ----

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// A report.json written by analyze, or a bare analysis report.
    #[arg(value_name = "FILE")]
    pub input: PathBuf,
    /// Directory that receives report.csv; prints to stdout when omitted.
    #[arg(long, env = "HOLDEM_PID_OUT", value_name = "DIR")]
    pub out: Option<PathBuf>,
}

pub fn cmd_report(args: ReportArgs) -> CmdResult {
    let text = read_text(&args.input)?;
    let report = match serde_json::from_str::<ReportArtifact>(&text) {
        Ok(artifact) => artifact.report,
        Err(_) => serde_json::from_str::<AnalysisReport>(&text)
            .map_err(|err| format!("{} is not an analysis report: {err}", args.input.display()))?,
    };
    let csv = csv_with_header(&report);
    match &args.out {
        Some(dir) => {
            let path = dir.join(REPORT_CSV_FILE);
            write_atomic(&path, csv.as_bytes())?;
            println!("wrote {}", path.display());
        }
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
