//! Command-line front end: extraction, extremal constructions, witness
//! verification, exhaustive Ramsey scans and the acceptance self-test.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 invalid or refused input,
//! 3 internal defect, 4 verification or self-test failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramsey_witness::constructions::{lower_bound_coloring, path_bad_coloring};
use ramsey_witness::extractor::{ExtractError, WitnessDocument};
use ramsey_witness::oracle::{ramsey_scan, OracleError, RamseyOutcome, RamseyTarget};
use ramsey_witness::random::random_coloring;
use ramsey_witness::selftest::{run_all, Scale};
use ramsey_witness::{
    decode_coloring, encode_coloring, extract, verify_witness, Instance, SearchLimits, TwoColoring,
};

const LIMITS_VAR: &str = "RAMSEY_WITNESS_LIMITS";

#[derive(Parser)]
#[command(
    name = "ramsey-witness",
    version,
    about = "Red long cycles or blue multipartite graphs in two-colored complete graphs"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract and verify a witness from a coloring.
    Extract(ExtractArgs),
    /// Write an extremal coloring in graph6 (red graph).
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Check a witness document against a coloring.
    Verify(VerifyArgs),
    /// Enumerate all colorings of K_N for a range of N.
    Ramsey(RamseyArgs),
    /// Run the acceptance criteria.
    Selftest {
        #[arg(long, value_enum, default_value = "small")]
        scale: ScaleArg,
    },
}

#[derive(Args)]
struct ExtractArgs {
    /// graph6 file holding the red graph.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    coloring: Option<PathBuf>,
    /// Use a seeded random coloring on this many vertices.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    /// Required red cycle length.
    #[arg(long)]
    n: usize,
    /// Ascending blue part sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
}

#[derive(Subcommand)]
enum Construction {
    /// Disjoint red cliques: k-1 of order n-1 and one of order m1-1.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blue cliques of orders m2+m1-1 and m2-2, red between them.
    PathBad {
        #[arg(long)]
        m1: usize,
        #[arg(long)]
        m2: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    witness: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

#[derive(Args)]
struct RamseyArgs {
    #[arg(long, value_enum)]
    target: TargetArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
    #[arg(long = "max-N", value_name = "N")]
    max_n: usize,
    #[arg(long = "min-N", value_name = "N", default_value_t = 1)]
    min_n: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn invalid(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = limits().and_then(|limits| match cli.command {
        Command::Extract(args) => cmd_extract(args),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Verify(args) => cmd_verify(args, cli.json),
        Command::Ramsey(args) => cmd_ramsey(args, &limits, cli.json),
        Command::Selftest { scale } => cmd_selftest(scale, cli.json),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn limits() -> Result<SearchLimits, Failure> {
    match std::env::var(LIMITS_VAR) {
        Ok(spec) => spec
            .parse()
            .map_err(|e: OracleError| Failure::invalid(format!("{LIMITS_VAR}: {e}"))),
        Err(_) => Ok(SearchLimits::default()),
    }
}

fn read_coloring(path: &Path) -> Result<TwoColoring, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    decode_coloring(&bytes).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_extract(args: ExtractArgs) -> Outcome {
    let inst = Instance::new(args.n, args.parts).map_err(Failure::invalid)?;
    let coloring = match (&args.coloring, args.random) {
        (Some(path), _) => read_coloring(path)?,
        (None, Some(n)) => random_coloring(n, args.seed),
        (None, None) => unreachable!("clap requires one source"),
    };
    match extract(&coloring, &inst) {
        Ok(w) => {
            println!("{}", WitnessDocument::new(&w, &inst).to_json());
            Ok(0)
        }
        Err(e @ ExtractError::Defect { .. }) => Err(Failure {
            code: 3,
            message: e.to_string(),
        }),
        Err(e) => Err(Failure::invalid(e)),
    }
}

fn cmd_construct(kind: Construction) -> Outcome {
    let (coloring, out) = match kind {
        Construction::LowerBound { n, parts, out } => (
            lower_bound_coloring(n, &parts).map_err(Failure::invalid)?,
            out,
        ),
        Construction::PathBad { m1, m2, out } => {
            (path_bad_coloring(m1, m2).map_err(Failure::invalid)?, out)
        }
    };
    write_output(out.as_deref(), &format!("{}\n", encode_coloring(&coloring)))?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, as_json: bool) -> Outcome {
    let inst = Instance::without_threshold(args.n, args.parts).map_err(Failure::invalid)?;
    let coloring = read_coloring(&args.coloring)?;
    let text = fs::read_to_string(&args.witness)
        .map_err(|e| Failure::io(format!("{}: {e}", args.witness.display())))?;
    let doc = WitnessDocument::from_json(&text)
        .map_err(|e| Failure::io(format!("{}: {e}", args.witness.display())))?;
    let witness = doc.witness().map_err(|e| Failure::io(e.to_string()))?;
    let verdict = verify_witness(&coloring, &inst, &witness);
    if as_json {
        let reason = verdict.as_ref().err().map(ToString::to_string);
        println!("{}", json!({ "valid": verdict.is_ok(), "reason": reason }));
    } else {
        match &verdict {
            Ok(()) => println!("valid"),
            Err(e) => println!("invalid: {e}"),
        }
    }
    Ok(if verdict.is_ok() { 0 } else { 4 })
}

fn cmd_ramsey(args: RamseyArgs, limits: &SearchLimits, as_json: bool) -> Outcome {
    let (target, name) = match args.target {
        TargetArg::Path => (RamseyTarget::RedPath(args.n), "path"),
        TargetArg::Cycle => (RamseyTarget::RedLongCycle(args.n), "cycle"),
    };
    if args.min_n > args.max_n {
        return Err(Failure::invalid("--min-N exceeds --max-N"));
    }
    let rows =
        ramsey_scan(target, &args.parts, args.min_n, args.max_n, limits).map_err(|e| match e {
            OracleError::NotMonotone { .. } => Failure {
                code: 3,
                message: e.to_string(),
            },
            other => Failure::invalid(other),
        })?;
    let first = rows.iter().find(|r| r.outcome.holds()).map(|r| r.n);
    if as_json {
        let rows: Vec<_> = rows
            .iter()
            .map(|r| match &r.outcome {
                RamseyOutcome::Holds => json!({ "N": r.n, "holds": true }),
                RamseyOutcome::Fails(c) => {
                    json!({ "N": r.n, "holds": false, "counterexample": encode_coloring(c) })
                }
            })
            .collect();
        let doc = json!({
            "target": name,
            "n": args.n,
            "parts": args.parts,
            "rows": rows,
            "first_holding": first,
        });
        println!("{doc}");
    } else {
        for r in &rows {
            match &r.outcome {
                RamseyOutcome::Holds => println!("N={:<3} holds", r.n),
                RamseyOutcome::Fails(c) => {
                    println!("N={:<3} fails  counterexample {}", r.n, encode_coloring(c))
                }
            }
        }
        let parts = args
            .parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        match first {
            Some(v) if rows[0].outcome.holds() && args.min_n > 1 => {
                println!("holds from N={v}; scan from a smaller N to pin the Ramsey number")
            }
            Some(v) => println!("R({name} {}, K[{parts}]) = {v}", args.n),
            None => println!("no N up to {} works", args.max_n),
        }
    }
    Ok(0)
}

fn cmd_selftest(scale: ScaleArg, as_json: bool) -> Outcome {
    let scale = match scale {
        ScaleArg::Small => Scale::Small,
        ScaleArg::Full => Scale::Full,
    };
    let reports = run_all(scale);
    if as_json {
        let items: Vec<_> = reports
            .iter()
            .map(
                |r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }),
            )
            .collect();
        println!("{}", serde_json::Value::Array(items));
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        0
    } else {
        4
    })
}
