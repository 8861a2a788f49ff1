//! `utorsion`: batch calculator for torsion orders, concordance invariants and
//! cobordism bounds of torus-knot expressions.

mod render;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use utorsion_core::cobordism::{self, MoveSequence};
use utorsion_core::knots::{self, parse_knot};
use utorsion_core::selftest::{self, BatteryConfig, Fault};
use utorsion_core::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "utorsion", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Torsion order and homology of a knot expression.
    Order { expr: String },
    /// Torsion order, signature, upsilon and the non-orientable genus bound.
    Invariants { expr: String },
    /// Graded root of a knot complex.
    Gradedroot {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Validate a move file and evaluate the bounds it implies.
    Cobordism { file: PathBuf },
    /// Bounds for the family T(2r-1,2r) # mirror(T(2s-1,2s)), r = gamma+m, s = m.
    Family {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        m: u32,
    },
    /// Run the built-in check battery.
    Selftest {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..=40))]
        max_n: u32,
        /// Seed for the random matrices and move sequences.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    CorruptGapFormula,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn json_out(command: &str, input: Value, result: Value) -> String {
    let mut s = serde_json::to_string_pretty(&report::envelope(command, input, result))
        .expect("JSON values always serialize");
    s.push('\n');
    s
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Order { expr } => {
            let k = parse_knot(&expr)?;
            let h = knots::knot_homology(&k)?;
            let order = knots::order_u(&k)?;
            Ok(json_out("order", expr.into(), report::order(&k, order, &h)))
        }
        Command::Invariants { expr } => {
            let k = parse_knot(&expr)?;
            let inv = knots::invariants(&k)?;
            Ok(json_out(
                "invariants",
                expr.into(),
                report::invariants(&k, &inv),
            ))
        }
        Command::Gradedroot { expr, format } => {
            let k = parse_knot(&expr)?;
            let root = render::GradedRoot::of(&k)?;
            Ok(match format {
                Format::Ascii => root.ascii(),
                Format::Svg => root.svg(),
                Format::Json => json_out("gradedroot", expr.into(), root.json()),
            })
        }
        Command::Cobordism { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.display())))?;
            let seq = MoveSequence::parse_move_file(&text)?;
            let rep = cobordism::cobordism_report(&seq)?;
            let input = Value::String(file.display().to_string());
            Ok(json_out("cobordism", input, report::cobordism(&seq, &rep)))
        }
        Command::Family { gamma, m } => {
            let f = cobordism::family_report(gamma, m)?;
            let input = serde_json::json!({ "gamma": gamma, "m": m });
            Ok(json_out("family", input, report::family(&f)))
        }
        Command::Selftest {
            max_n,
            seed,
            inject_fault,
        } => {
            let mut cfg = BatteryConfig {
                max_n,
                ..Default::default()
            };
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            cfg.fault = inject_fault.map(|FaultArg::CorruptGapFormula| Fault::CorruptGapFormula);
            selftest_table(&cfg)
        }
    }
}

fn selftest_table(cfg: &BatteryConfig) -> Result<String, Failure> {
    let outcomes = selftest::run_battery(cfg);
    let mut out = String::new();
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{mark}  [{}] {}: {}", o.id, o.name, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} checks passed", outcomes.len());
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Internal(format!(
            "{failed} of {} checks failed",
            outcomes.len()
        )))
    }
}
