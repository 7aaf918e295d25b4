//! `diu` — data-integrity unit CLI.
//!
//! Subcommands: `hash` files or stdin, `selftest` against frozen vectors,
//! `bench` throughput, `trace` per-step registers through the unified core,
//! and `report` the functional-unit resource model.
//!
//! Exit codes: 0 success, 1 self-test mismatch, 2 usage or I/O error.
//! stdout carries only results; diagnostics go to stderr.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{RngCore, SeedableRng};

use diu::unified::{resource_report, unified_digest, Mode, UnifiedCore};
use diu::vectors::{parse_vectors, run_selftest, DEFAULT_VECTORS};
use diu::word::pad_message;
use diu::{digest, Algorithm};

#[derive(Parser)]
#[command(name = "diu", version, about = "MD5 / SHA-1 / SHA-192 data-integrity unit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hash a file or stdin and print the lowercase hex digest.
    Hash(HashArgs),
    /// Run the known-answer self-test (standalone and unified paths).
    Selftest {
        /// Vector file to check instead of the built-in frozen set.
        #[arg(long)]
        vectors: Option<PathBuf>,
    },
    /// Measure digest throughput over a random payload.
    Bench(BenchArgs),
    /// Dump per-step register values of one block through the unified core.
    Trace(TraceArgs),
    /// Print the functional-unit resource model.
    Report,
}

#[derive(Args)]
struct HashArgs {
    #[arg(long, value_enum)]
    alg: AlgArg,
    /// Run through the unified datapath (md5 and sha192 only).
    #[arg(long)]
    unified: bool,
    /// Print `<alg>(<input>)= <hex>` instead of the bare digest.
    #[arg(long)]
    tagged: bool,
    /// Input path; `-` reads stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    alg: AlgArg,
    /// Payload size in bytes.
    #[arg(long)]
    bytes: usize,
    /// Number of repetitions to average over.
    #[arg(long)]
    reps: u32,
    /// Also print the payload digest and check it against a fresh one-shot.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long, value_enum)]
    alg: TraceAlg,
    /// Message as hex.
    #[arg(long)]
    msg: String,
    /// Which padded block to trace.
    #[arg(long, default_value_t = 0)]
    block: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Md5,
    Sha1,
    Sha192,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Algorithm {
        match a {
            AlgArg::Md5 => Algorithm::Md5,
            AlgArg::Sha1 => Algorithm::Sha1,
            AlgArg::Sha192 => Algorithm::Sha192,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceAlg {
    Md5,
    Sha192,
}

impl From<TraceAlg> for Mode {
    fn from(a: TraceAlg) -> Mode {
        match a {
            TraceAlg::Md5 => Mode::Md5,
            TraceAlg::Sha192 => Mode::Sha192,
        }
    }
}

enum CliError {
    /// Usage or I/O problem; exit 2.
    Usage(String),
    /// Self-test found mismatches; exit 1.
    SelftestFailed,
    /// Downstream reader went away; stop quietly.
    BrokenPipe,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::SelftestFailed => f.write_str("self-test failed"),
            CliError::BrokenPipe => f.write_str("broken pipe"),
        }
    }
}

fn usage<E: fmt::Display>(context: &str) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Usage(format!("{context}: {e}"))
}

/// Writes one result line to stdout; a closed pipe is not an error.
fn emit(args: fmt::Arguments<'_>) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    out.write_fmt(args)
        .and_then(|()| out.write_all(b"\n"))
        .map_err(|e| {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                CliError::BrokenPipe
            } else {
                CliError::Usage(format!("writing stdout: {e}"))
            }
        })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    match run(cli) {
        Ok(()) | Err(CliError::BrokenPipe) => ExitCode::SUCCESS,
        Err(CliError::SelftestFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("diu: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Hash(args) => cmd_hash(args),
        Command::Selftest { vectors } => cmd_selftest(vectors),
        Command::Bench(args) => cmd_bench(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Report => cmd_report(),
    }
}

fn read_input(input: &str) -> Result<Vec<u8>, CliError> {
    if input == "-" {
        let mut data = Vec::new();
        std::io::stdin()
            .read_to_end(&mut data)
            .map_err(usage("reading stdin"))?;
        Ok(data)
    } else {
        fs::read(input).map_err(usage(input))
    }
}

fn cmd_hash(args: HashArgs) -> Result<(), CliError> {
    let alg: Algorithm = args.alg.into();
    let data = read_input(&args.input)?;

    let out = if args.unified {
        let mode = match alg {
            Algorithm::Md5 => Mode::Md5,
            Algorithm::Sha192 => Mode::Sha192,
            Algorithm::Sha1 => {
                return Err(CliError::Usage(
                    "--unified supports md5 and sha192 only".into(),
                ))
            }
        };
        unified_digest(mode, &data).map_err(usage("hashing"))?
    } else {
        digest(alg, &data)
    };

    if args.tagged {
        emit(format_args!("{}({})= {}", alg.name(), args.input, hex::encode(out)))
    } else {
        emit(format_args!("{}", hex::encode(out)))
    }
}

fn cmd_selftest(vectors_path: Option<PathBuf>) -> Result<(), CliError> {
    let text = match &vectors_path {
        Some(path) => fs::read_to_string(path).map_err(usage(&path.display().to_string()))?,
        None => DEFAULT_VECTORS.to_string(),
    };
    let vectors = parse_vectors(&text).map_err(usage("vector file"))?;

    let report = run_selftest(&vectors);
    for failure in &report.failures {
        emit(format_args!("FAIL {failure}"))?;
    }
    emit(format_args!(
        "selftest: {} passed, {} failed",
        report.passed,
        report.failures.len()
    ))?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::SelftestFailed)
    }
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    if args.bytes == 0 {
        return Err(CliError::Usage("--bytes must be at least 1".into()));
    }
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let alg: Algorithm = args.alg.into();

    let mut payload = vec![0u8; args.bytes];
    rand::rngs::StdRng::seed_from_u64(0x0D1C_E5ED).fill_bytes(&mut payload);

    let start = Instant::now();
    let mut last = Vec::new();
    for _ in 0..args.reps {
        last = digest(alg, &payload);
    }
    let elapsed = start.elapsed().as_secs_f64();
    let mb_per_s = (args.bytes as f64 * f64::from(args.reps)) / elapsed / 1e6;

    emit(format_args!("{} {:.2}", alg.name(), mb_per_s))?;
    if args.verify {
        if last != digest(alg, &payload) {
            return Err(CliError::Usage("verify: repeated digest mismatch".into()));
        }
        emit(format_args!("digest {}", hex::encode(last)))?;
    }
    Ok(())
}

fn cmd_trace(args: TraceArgs) -> Result<(), CliError> {
    let mode: Mode = args.alg.into();
    let message = hex::decode(&args.msg).map_err(usage("--msg"))?;

    let blocks = pad_message(&message, mode.length_encoding()).map_err(usage("padding"))?;
    if args.block >= blocks.len() {
        return Err(CliError::Usage(format!(
            "block index {} out of range (message pads to {} blocks)",
            args.block,
            blocks.len()
        )));
    }

    let mut core = UnifiedCore::new(mode);
    let mut cv = mode.iv();
    for block in &blocks[..args.block] {
        core.load_block(&cv, block).expect("arity fixed by mode");
        cv = core.run_block().expect("freshly loaded block");
    }

    core.load_block(&cv, &blocks[args.block]).expect("arity fixed by mode");
    for _ in 0..mode.steps() {
        let trace = core.step().expect("step within bounds");
        let r = trace.regs;
        emit(format_args!(
            "t={} A={:08x} B={:08x} C={:08x} D={:08x} E={:08x} F={:08x}",
            trace.step, r[0], r[1], r[2], r[3], r[4], r[5]
        ))?;
    }
    Ok(())
}

fn cmd_report() -> Result<(), CliError> {
    let report = resource_report();
    emit(format_args!("md5_only: {}", report.md5_only))?;
    emit(format_args!("sha192_only: {}", report.sha192_only))?;
    emit(format_args!(
        "unified: {} mode_muxes={}",
        report.unified, report.unified_mode_muxes
    ))?;
    emit(format_args!("unified_saves_units: {}", report.unified_saves_units()))
}
