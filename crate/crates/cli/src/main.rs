//! `burnkit` command-line tool.
//!
//! Exit codes: 0 success, 1 failed verification or unexplained sweep
//! mismatch, 2 input error, 3 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burnkit::compute::{compute, Strategy};
use burnkit::solver::{check_sequence, extract_partition};
use burnkit::sweep::{parse_errata, run_sweep, SweepOptions, SweepReport};
use burnkit::{
    burning_number_exact, BurnResult, BurningSequence, Error, FamilyDescriptor, FamilySpec, Graph,
    Method, SweepClass,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "burnkit", version, about = "Burning numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the burning number of a graph.
    Compute(ComputeArgs),
    /// Check whether a sequence of vertices burns a graph.
    Verify(VerifyArgs),
    /// Compare a closed form or table against the exact solver over a whole class.
    Sweep(SweepArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file: a line "n m" followed by m lines "u v".
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec such as `cycle:5`, `forest:3,2,1` or `uni:7;4`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Print a burning sequence, and for exact results its tree partition.
    #[arg(long)]
    certificate: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    Formula,
}

impl From<MethodArg> for Strategy {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Strategy::Auto,
            MethodArg::Exact => Strategy::Exact,
            MethodArg::Formula => Strategy::Formula,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    /// Comma-separated vertex ids, first source first.
    #[arg(long)]
    sequence: String,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_class)]
    class: SweepClass,
    #[arg(long)]
    max_n: usize,
    /// Accepted discrepancies, one "t g a1 [a2] table exact note" per line.
    #[arg(long)]
    errata: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report destination; JSON when the name ends in `.json`, TSV otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit 0 even when some instances ran out of search budget.
    #[arg(long)]
    allow_inconclusive: bool,
}

fn parse_class(s: &str) -> Result<SweepClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Inconclusive { .. }) {
            3
        } else {
            2
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn load_graph(input: &Input) -> Result<Graph, Failure> {
    match (&input.file, &input.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            text.parse()
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        (None, Some(spec)) => Ok(spec.parse::<FamilySpec>()?.build()),
        _ => Err(Failure::input("give exactly one of --file and --family")),
    }
}

#[derive(Serialize)]
struct ComputeDoc<'a> {
    n: usize,
    family: &'a FamilyDescriptor,
    q: Option<u64>,
    r: Option<u64>,
    value: usize,
    method: Method,
    lower: usize,
    upper: usize,
    certificate: Option<&'a BurningSequence>,
}

fn is_exact(r: &BurnResult) -> bool {
    matches!(r.method, Method::Exact | Method::FallbackExact)
}

fn cmd_compute(args: ComputeArgs) -> CmdResult {
    let g = load_graph(&args.input)?;
    let mut c = compute(&g, args.method.into(), None)?;
    if args.certificate && c.result.certificate.is_none() {
        let exact = burning_number_exact(&g, None)?;
        if exact.value != c.result.value {
            return Err(Failure {
                code: 1,
                msg: format!(
                    "{} gives {} but the exact solver gives {}",
                    c.result.method, c.result.value, exact.value
                ),
            });
        }
        c.result.certificate = exact.certificate;
    }
    let r = &c.result;
    if args.json {
        let doc = ComputeDoc {
            n: g.order(),
            family: &c.family,
            q: c.qr.map(|x| x.q),
            r: c.qr.map(|x| x.r),
            value: r.value,
            method: r.method,
            lower: r.lower_bound,
            upper: r.upper_bound,
            certificate: r.certificate.as_ref(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
        return Ok(0);
    }

    println!("family: {}", c.family);
    match c.qr {
        Some(qr) => println!("n: {} (q = {}, r = {})", g.order(), qr.q, qr.r),
        None => println!("n: {}", g.order()),
    }
    println!("value: {}", r.value);
    println!("method: {}", r.method);
    println!("bounds: [{}, {}]", r.lower_bound, r.upper_bound);
    if r.table_gap {
        println!("note: no table row matched; value from the exact solver");
    }
    if args.certificate {
        if let Some(seq) = &r.certificate {
            println!("sequence: {seq}");
            if is_exact(r) {
                let p = extract_partition(&g, seq)?;
                for (i, part) in p.parts.iter().enumerate() {
                    let vs: Vec<_> = part.vertices.iter().map(|v| v.to_string()).collect();
                    println!(
                        "tree {i}: root {} height {} vertices {{{}}}",
                        part.root,
                        part.height,
                        vs.join(",")
                    );
                }
            }
        }
    }
    Ok(0)
}

fn parse_sequence(s: &str) -> Result<BurningSequence, Failure> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Failure::input(format!("bad vertex id {x:?} in sequence")))
        })
        .collect::<Result<_, _>>()
        .map(BurningSequence)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let g = load_graph(&args.input)?;
    let seq = parse_sequence(&args.sequence)?;
    match check_sequence(&g, &seq)? {
        None => {
            println!("valid burning sequence of length {}", seq.len());
            Ok(0)
        }
        Some(v) => {
            println!("invalid: {v}");
            Ok(1)
        }
    }
}

fn write_report(report: &SweepReport, path: &Path) -> Result<(), Failure> {
    let text = if path.extension().is_some_and(|e| e == "json") {
        serde_json::to_string_pretty(report).expect("serializable") + "\n"
    } else {
        report.to_tsv()
    };
    fs::write(path, text)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn cmd_sweep(args: SweepArgs) -> CmdResult {
    let errata = match &args.errata {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            parse_errata(&text)?
        }
        None => Vec::new(),
    };
    let opts = SweepOptions {
        jobs: args.jobs,
        budget: None,
        errata,
    };
    let report = run_sweep(args.class, args.max_n, &opts)?;
    if let Some(path) = &args.out {
        write_report(&report, path)?;
    }
    let s = &report.summary;
    for row in report.rows.iter().filter(|r| !r.agree || r.inconclusive()) {
        let exact = row.exact.map_or("inconclusive".into(), |v| v.to_string());
        let tag = if row.listed { " (listed)" } else { "" };
        println!("{}: formula {} exact {exact}{tag}", row.spec, row.formula);
    }
    println!(
        "{} max_n {}: {} instances, {} mismatches ({} unexplained), {} inconclusive, {:.2?}",
        s.class, s.max_n, s.instances, s.mismatches, s.unexplained, s.inconclusive, report.runtime
    );
    if s.unused_errata > 0 {
        eprintln!(
            "warning: {} errata entries matched no mismatch",
            s.unused_errata
        );
    }
    Ok(if s.unexplained > 0 {
        1
    } else if s.inconclusive > 0 && !args.allow_inconclusive {
        3
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
