//! `seshadri` — exact nef/ample tests and Seshadri constants for
//! torus-equivariant bundles, driven by JSON problem files.
//!
//! Exit codes: 0 ok, 2 schema, 3 guard, 4 math-consistency, 5 seshadri
//! requested for a non-nef bundle. Every error prints one machine-parsable
//! `error[<class>]: <message>` line on stderr.

mod problem;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use seshadri_core::error::Error;
use seshadri_core::rootsys::RootSystem;
use seshadri_core::selftest::{self, Depth};
use seshadri_core::weyl;

use problem::{human_line, OpName, PointField, ResultFile};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub class: &'static str,
    pub message: String,
}

impl CliError {
    fn schema(message: String) -> Self {
        CliError {
            code: 2,
            class: "schema",
            message,
        }
    }

    fn io(message: String) -> Self {
        CliError {
            code: 2,
            class: "io",
            message,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.class, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, class) = match &e {
            Error::Guard(_) => (3, "guard"),
            Error::MathConsistency(_) | Error::Overflow(_) => (4, "math-consistency"),
            Error::NonNef { .. } => (5, "non-nef"),
            _ => (2, "schema"),
        };
        CliError {
            code,
            class,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "seshadri",
    version,
    about = "Exact nef/ample tests and Seshadri constants on torus-invariant curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Cartan data for a root system type like A2, B3 or A1xA1
    Describe {
        /// Root system type string
        r#type: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Queries on a variety built from a reduced word
    Bsdh {
        #[command(subcommand)]
        op: BsdhCommand,
    },
    /// Queries on a wonderful compactification given by an involution
    Wonderful {
        #[command(subcommand)]
        op: WonderfulCommand,
    },
    /// Run the invariant corpus (criteria 1-9); --full is the acceptance depth
    Selftest {
        #[arg(long)]
        full: bool,
        /// Also write the report to a file
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct IoArgs {
    /// JSON problem file
    #[arg(long)]
    input: PathBuf,
    /// Write the JSON result file here
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write DOT output here (gkm-graph)
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Print the JSON result file on stdout
    #[arg(long)]
    json: bool,
    /// Query point: a bit-string (bsdh) or comma-separated Weyl word (wonderful)
    #[arg(long)]
    point: Option<String>,
    /// Record per-query timings (off by default: timed output is not
    /// byte-reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum BsdhCommand {
    /// List invariant curves with tangent weights and basis degrees
    Curves(IoArgs),
    /// Nef test for the problem file's bundle
    Nef(IoArgs),
    /// Ample test for the problem file's bundle
    Ample(IoArgs),
    /// Seshadri constant at a fixed point (requires a nef bundle)
    Seshadri(IoArgs),
    /// Export the GKM graph as DOT
    GkmGraph(IoArgs),
}

#[derive(Subcommand)]
enum WonderfulCommand {
    /// List curve classes and the minimal-rank report
    Classes(IoArgs),
    /// Nef test for the restriction table
    Nef(IoArgs),
    /// Ample test for the restriction table
    Ample(IoArgs),
    /// Seshadri constant at a translated base point
    Seshadri(IoArgs),
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code)
        }
    }
}

fn run() -> Result<(), CliError> {
    match Cli::parse().command {
        Command::Describe { r#type, json } => describe(&r#type, json),
        Command::Bsdh { op } => {
            let (op_name, args) = match op {
                BsdhCommand::Curves(a) => (OpName::Curves, a),
                BsdhCommand::Nef(a) => (OpName::Nef, a),
                BsdhCommand::Ample(a) => (OpName::Ample, a),
                BsdhCommand::Seshadri(a) => (OpName::Seshadri, a),
                BsdhCommand::GkmGraph(a) => (OpName::GkmGraph, a),
            };
            execute(op_name, args, problem::Mode::Bsdh)
        }
        Command::Wonderful { op } => {
            let (op_name, args) = match op {
                WonderfulCommand::Classes(a) => (OpName::Classes, a),
                WonderfulCommand::Nef(a) => (OpName::Nef, a),
                WonderfulCommand::Ample(a) => (OpName::Ample, a),
                WonderfulCommand::Seshadri(a) => (OpName::Seshadri, a),
            };
            execute(op_name, args, problem::Mode::Wonderful)
        }
        Command::Selftest { full, output } => selftest_cmd(full, output),
    }
}

fn describe(type_str: &str, json: bool) -> Result<(), CliError> {
    let rs = RootSystem::from_type(type_str)?;
    let weyl_order = rs.weyl_order();
    if json {
        let value = serde_json::json!({
            "type": rs.type_name(),
            "rank": rs.rank(),
            "cartan": rs.cartan(),
            "simple_lengths": rs.simple_lengths(),
            "positive_roots": rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
            "positive_root_count": rs.positive_roots().len(),
            "weyl_order": weyl_order.to_string(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        println!("type: {}", rs.type_name());
        println!("rank: {}", rs.rank());
        println!("cartan matrix: {:?}", rs.cartan());
        println!("simple root half-lengths: {:?}", rs.simple_lengths());
        let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.to_string()).collect();
        println!("positive roots ({}): {}", roots.len(), roots.join(", "));
        println!("weyl group order: {weyl_order}");
        if rs.rank() <= 4 {
            let count = weyl::enumerate_weyl(&rs)?.len();
            println!("weyl group elements enumerated: {count}");
        }
    }
    Ok(())
}

fn execute(op: OpName, args: IoArgs, expect_mode: problem::Mode) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::io(format!("{}: {e}", args.input.display())))?;
    let file = problem::parse_problem(&text)?;
    if file.mode != expect_mode {
        return Err(CliError::schema(format!(
            "problem file mode does not match the subcommand (expected {})",
            if expect_mode == problem::Mode::Bsdh {
                "bsdh"
            } else {
                "wonderful"
            }
        )));
    }
    let loaded = problem::load(&file)?;
    let cli_point = args
        .point
        .as_deref()
        .map(|p| parse_cli_point(p, expect_mode));
    let queries = problem::select_queries(&file, op, cli_point);
    let mut results = Vec::new();
    let mut dot_text = None;
    for query in &queries {
        let (result, dot) = problem::run_query(&loaded, query, args.timings)?;
        results.push(result);
        if dot.is_some() {
            dot_text = dot;
        }
    }
    if let Some(dot) = &dot_text {
        match &args.dot {
            Some(path) => std::fs::write(path, dot)
                .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?,
            None => print!("{dot}"),
        }
    }
    let result_file = ResultFile { results };
    let rendered = serde_json::to_string_pretty(&result_file).expect("result file is serializable");
    if let Some(path) = &args.output {
        std::fs::write(path, format!("{rendered}\n"))
            .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    }
    if args.json {
        println!("{rendered}");
    } else if dot_text.is_none() || args.dot.is_some() {
        for result in &result_file.results {
            println!("{}", human_line(result));
        }
    }
    Ok(())
}

fn parse_cli_point(text: &str, mode: problem::Mode) -> PointField {
    match mode {
        problem::Mode::Bsdh => PointField::Bits(text.to_string()),
        problem::Mode::Wonderful => {
            if text == "e" || text.is_empty() {
                PointField::WeylWord(vec![])
            } else {
                PointField::WeylWord(
                    text.split(',')
                        .filter_map(|p| p.trim().parse().ok())
                        .collect(),
                )
            }
        }
    }
}

fn selftest_cmd(full: bool, output: Option<PathBuf>) -> Result<(), CliError> {
    let report = selftest::run(if full { Depth::Full } else { Depth::Small });
    let text = report.to_string();
    print!("{text}");
    if let Some(path) = &output {
        std::fs::write(path, &text)
            .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    }
    if report.all_pass() {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        Err(CliError {
            code: 1,
            class: "selftest",
            message: format!("failed checks: {}", failed.join(", ")),
        })
    }
}
