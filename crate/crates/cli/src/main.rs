//! `ltoracle` command-line front end.
//!
//! Exit status: 0 on success, 2 for invalid arguments, 3 when a request is
//! well-formed but outside an operation's domain, 1 for I/O and malformed
//! input files. Errors go to stderr as `error[<kind>] <message>`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ltoracle::amplification::{build_amplification, plan_iterations};
use ltoracle::decompose::{depth_sweep, summarize, sweep_csv, Method, SweepOptions};
use ltoracle::sim::{run, run_from, sample, Histogram, StateVector};
use ltoracle::{peephole_cancel_x, Circuit, Comparison, Gate, OracleSpec};

/// Environment variable naming the directory used when `--out` is omitted.
const OUT_DIR_ENV: &str = "LTORACLE_OUT_DIR";

/// Largest register accepted by `depth-compare`.
const MAX_SWEEP_QUBITS: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "ltoracle", version, about = "Comparison phase oracles and amplitude amplification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an oracle circuit as JSON.
    Gen {
        #[command(flatten)]
        oracle: OracleArgs,
        /// Cancel adjacent X pairs.
        #[arg(long)]
        peephole: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Simulate a circuit and sample measurement outcomes.
    Simulate {
        /// Circuit JSON file. When absent, an oracle is built from --op.
        #[arg(long, conflicts_with_all = ["op", "n", "m", "a", "b"])]
        circuit: Option<PathBuf>,
        #[command(flatten)]
        oracle: OptionalOracleArgs,
        /// Prepend a Hadamard on every qubit.
        #[arg(long)]
        hadamard: bool,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Amplify the states marked by an oracle and sample the result.
    Amplify {
        #[command(flatten)]
        oracle: OracleArgs,
        /// Override the planned number of Grover iterations.
        #[arg(long)]
        iterations: Option<usize>,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Lowered depth of the oracle and the diagonal baseline for every m.
    DepthCompare {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Cancel adjacent X pairs after lowering, for both methods.
        #[arg(long)]
        peephole: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    /// i < m
    Lt,
    /// i >= m
    Ge,
    /// a <= i < b
    Range,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Number of qubits.
    #[arg(long)]
    n: usize,
    /// Threshold for lt and ge.
    #[arg(long)]
    m: Option<u64>,
    /// Inclusive lower bound for range.
    #[arg(long)]
    a: Option<u64>,
    /// Exclusive upper bound for range.
    #[arg(long)]
    b: Option<u64>,
}

#[derive(Args, Debug)]
struct OptionalOracleArgs {
    #[arg(long, value_enum)]
    op: Option<Op>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
}

#[derive(Args, Debug)]
struct SamplingArgs {
    #[arg(long, default_value_t = 20_000)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Output file. Defaults to a generated name in $LTORACLE_OUT_DIR, or
    /// stdout when that is unset.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Input(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Input(_) | Failure::Io(_) => 1,
        }
    }

    fn report(&self) -> String {
        match self {
            Failure::Usage(m) => format!("error[usage] {m}"),
            Failure::Domain(m) => format!("error[domain] {m}"),
            Failure::Input(m) => format!("error[input] {m}"),
            Failure::Io(m) => format!("error[io] {m}"),
        }
    }
}

impl From<ltoracle::Error> for Failure {
    fn from(e: ltoracle::Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn oracle_spec(op: Op, n: usize, m: Option<u64>, a: Option<u64>, b: Option<u64>) -> CliResult<OracleSpec> {
    let need = |v: Option<u64>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--op {} requires --{flag}", op_name(op))))
    };
    let spec = match op {
        Op::Lt => OracleSpec::less_than(n, need(m, "m")?),
        Op::Ge => OracleSpec::greater_equal(n, need(m, "m")?),
        Op::Range => OracleSpec::range(n, need(a, "a")?, need(b, "b")?),
    };
    // a zero-width register is an argument problem, not a domain one
    spec.map_err(|e| match e {
        ltoracle::Error::ZeroWidth => Failure::Usage(e.to_string()),
        e => e.into(),
    })
}

fn op_name(op: Op) -> &'static str {
    match op {
        Op::Lt => "lt",
        Op::Ge => "ge",
        Op::Range => "range",
    }
}

fn spec_stem(spec: &OracleSpec) -> String {
    let n = spec.num_qubits();
    match spec.op() {
        Comparison::LessThan(m) => format!("lt_n{n}_m{m}"),
        Comparison::GreaterEqual(m) => format!("ge_n{n}_m{m}"),
        Comparison::Range { a, b } => format!("range_n{n}_a{a}_b{b}"),
    }
}

/// Where an artifact goes: an explicit path, the env directory, or stdout.
fn destination(out: &OutArgs, default_name: &str) -> Option<PathBuf> {
    out.out.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV)
            .filter(|d| !d.is_empty())
            .map(|d| Path::new(&d).join(default_name))
    })
}

/// Writes `body` to `dest` (or stdout) and returns a sink for the summary:
/// stdout when the artifact went to a file, stderr otherwise.
fn emit(dest: Option<PathBuf>, body: &str) -> CliResult<Box<dyn Write>> {
    match dest {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)
                    .map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
            }
            fs::write(&path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(Box::new(io::stdout()))
        }
        None => {
            io::stdout()
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))?;
            Ok(Box::new(io::stderr()))
        }
    }
}

fn say(sink: &mut dyn Write, line: std::fmt::Arguments) -> CliResult<()> {
    writeln!(sink, "{line}").map_err(|e| Failure::Io(e.to_string()))
}

fn histogram_body(h: &Histogram, format: Format) -> String {
    match format {
        Format::Csv => h.to_csv(),
        Format::Json => {
            let mut s = h.to_json();
            s.push('\n');
            s
        }
    }
}

fn cmd_gen(oracle: OracleArgs, peephole: bool, out: OutArgs) -> CliResult<()> {
    let spec = oracle_spec(oracle.op, oracle.n, oracle.m, oracle.a, oracle.b)?;
    let mut c = spec.build();
    if peephole {
        c = peephole_cancel_x(&c);
    }
    let mut body = c.to_json();
    body.push('\n');
    let dest = destination(&out, &format!("{}.json", spec_stem(&spec)));
    let mut sink = emit(dest, &body)?;
    say(
        &mut sink,
        format_args!("gates={} width={} depth={}", c.len(), c.width(), c.depth().depth),
    )
}

fn cmd_simulate(
    circuit: Option<PathBuf>,
    oracle: OptionalOracleArgs,
    hadamard: bool,
    sampling: SamplingArgs,
    out: OutArgs,
) -> CliResult<()> {
    let (c, spec, stem) = match circuit {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let c = Circuit::from_json(&text)?;
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "circuit".into());
            (c, None, stem)
        }
        None => {
            let op = oracle
                .op
                .ok_or_else(|| Failure::Usage("simulate needs --circuit or --op".into()))?;
            let n = oracle
                .n
                .ok_or_else(|| Failure::Usage("--op requires --n".into()))?;
            let spec = oracle_spec(op, n, oracle.m, oracle.a, oracle.b)?;
            (spec.build(), Some(spec), spec_stem(&spec))
        }
    };
    let mut state = StateVector::zero(c.width())?;
    if hadamard {
        for q in 0..c.width() {
            state.apply(&Gate::H(q))?;
        }
    }
    let state = run_from(&c, state)?;
    let h = sample(&state, sampling.shots, sampling.seed)?;
    let name = format!(
        "simulate_{stem}_seed{}.{}",
        sampling.seed,
        sampling.format.extension()
    );
    let mut sink = emit(destination(&out, &name), &histogram_body(&h, sampling.format))?;
    say(
        &mut sink,
        format_args!(
            "width={} gates={} shots={} distinct_states={}",
            c.width(),
            c.len(),
            h.shots(),
            h.counts().len()
        ),
    )?;
    if let Some(spec) = spec {
        say(
            &mut sink,
            format_args!(
                "marked_mass={}",
                h.mass_where(|i| spec.is_marked(i as u64))
            ),
        )?;
    }
    Ok(())
}

fn cmd_amplify(
    oracle: OracleArgs,
    iterations: Option<usize>,
    sampling: SamplingArgs,
    out: OutArgs,
) -> CliResult<()> {
    let spec = oracle_spec(oracle.op, oracle.n, oracle.m, oracle.a, oracle.b)?;
    let marked = spec.marked_count();
    let mut plan = plan_iterations(spec.num_qubits(), marked)?;
    if let Some(k) = iterations {
        plan = plan.with_iterations(k);
    }
    let c = build_amplification(&spec.build(), marked, Some(plan.iterations))?;
    let state = run(&c)?;
    let h = sample(&state, sampling.shots, sampling.seed)?;
    let name = format!(
        "amplify_{}_seed{}.{}",
        spec_stem(&spec),
        sampling.seed,
        sampling.format.extension()
    );
    let mut sink = emit(destination(&out, &name), &histogram_body(&h, sampling.format))?;
    say(
        &mut sink,
        format_args!(
            "iterations={} marked={} total={} predicted_success={} empirical_success={} shots={}",
            plan.iterations,
            marked,
            plan.total,
            plan.predicted_success,
            h.mass_where(|i| spec.is_marked(i as u64)),
            h.shots()
        ),
    )
}

fn cmd_depth_compare(n_min: usize, n_max: usize, peephole: bool, out: OutArgs) -> CliResult<()> {
    if n_min > n_max {
        return Err(Failure::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    if n_max > MAX_SWEEP_QUBITS {
        return Err(ltoracle::Error::TooManyQubits {
            n: n_max,
            limit: MAX_SWEEP_QUBITS,
        }
        .into());
    }
    let opts = SweepOptions { peephole };
    let mut rows = Vec::new();
    for method in Method::ALL {
        rows.extend(depth_sweep(n_min..=n_max, method, opts)?);
    }
    rows.sort_by_key(|r| (r.n, r.m, r.method));
    let name = format!("depth_n{n_min}-{n_max}.csv");
    let mut sink = emit(destination(&out, &name), &sweep_csv(&rows))?;
    say(
        &mut sink,
        format_args!("{:>3} {:<18} {:>6} {:>10} {:>6} {:>6}", "n", "method", "count", "mean", "min", "max"),
    )?;
    let mut summary = summarize(&rows);
    summary.sort_by_key(|s| (s.n, s.method));
    for s in summary {
        say(
            &mut sink,
            format_args!(
                "{:>3} {:<18} {:>6} {:>10.2} {:>6} {:>6}",
                s.n,
                s.method.as_str(),
                s.count,
                s.mean,
                s.min,
                s.max
            ),
        )?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen {
            oracle,
            peephole,
            out,
        } => cmd_gen(oracle, peephole, out),
        Command::Simulate {
            circuit,
            oracle,
            hadamard,
            sampling,
            out,
        } => cmd_simulate(circuit, oracle, hadamard, sampling, out),
        Command::Amplify {
            oracle,
            iterations,
            sampling,
            out,
        } => cmd_amplify(oracle, iterations, sampling, out),
        Command::DepthCompare {
            n_min,
            n_max,
            peephole,
            out,
        } => cmd_depth_compare(n_min, n_max, peephole, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.report());
            ExitCode::from(f.exit_code())
        }
    }
}
