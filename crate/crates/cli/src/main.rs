//! `eqhilb`: generating series of equivariant Hilbert schemes of points.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 config error, 4 math-domain error.

mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqhilb::local::{closed_form_a_type, conjectured_product_3_1, goettsche_product, local_series};
use eqhilb::verify::{self, Check, VerifyParams};
use eqhilb::{GroupActionSpec, MotivicSeries, Support, Variant};

use crate::render::Format;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONFIG: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(name = "eqhilb", version, about = "Motivic generating series of equivariant Hilbert schemes of points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Local series of Z_M acting on C^2 by (x, y) -> (s x, s^N y).
    Local(LocalArgs),
    /// Product formulas for the local series.
    ClosedForm(ClosedFormArgs),
    /// Log decomposition of a local series.
    Log(LocalArgs),
    /// Global series assembled from a stratification config.
    Global(GlobalArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SupportArg {
    Origin,
    Line,
}

impl From<SupportArg> for Support {
    fn from(s: SupportArg) -> Self {
        match s {
            SupportArg::Origin => Support::Origin,
            SupportArg::Line => Support::Line,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Specialize L := 1 and print integers.
    #[arg(long)]
    euler: bool,
}

#[derive(Args)]
struct LocalArgs {
    /// Group order.
    #[arg(long = "M")]
    m: usize,
    /// Weight on the second coordinate, taken mod M.
    #[arg(long = "N", default_value_t = -1, allow_negative_numbers = true)]
    n: i64,
    /// 1: invariant locus, 2: main component.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    variant: u8,
    #[arg(long, value_enum, default_value_t = SupportArg::Origin)]
    support: SupportArg,
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    /// Product for N = -1 mod M (A-type singularity).
    AType,
    /// Conjectured product for M = 3, N = 1, invariant locus at the origin.
    #[value(name = "conjecture-3-1")]
    Conjecture31,
    /// prod 1/(1 - L^(i-1) T^i), the punctual series of a smooth surface point.
    Goettsche,
}

#[derive(Args)]
struct ClosedFormArgs {
    #[arg(long, value_enum, default_value_t = Formula::AType)]
    formula: Formula,
    /// Group order (a-type only).
    #[arg(long = "M", default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    variant: u8,
    #[arg(long, value_enum, default_value_t = SupportArg::Origin)]
    support: SupportArg,
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["config", "bundled"]))]
struct GlobalArgs {
    /// Path to a JSON stratification config.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Name of a config shipped with the binary (cp2-z3).
    #[arg(long)]
    bundled: Option<String>,
    /// Overrides the order in the config.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_check)]
    check: Check,
    /// Truncation order; for `stabilization` the largest T-power compared.
    #[arg(long)]
    order: Option<usize>,
    /// Moduli for `theorem2` and `stabilization`, comma separated.
    #[arg(long = "M", value_delimiter = ',')]
    moduli: Option<Vec<usize>>,
    /// `M:N1:N2` triples for `remark1`, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
    pairs: Option<Vec<(usize, i64, i64)>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse::<Check>().map_err(|_| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_pair(s: &str) -> Result<(usize, i64, i64), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || format!("expected M:N1:N2, got '{s}'");
    if parts.len() != 3 {
        return Err(bad());
    }
    let m = parts[0].trim().parse().map_err(|_| bad())?;
    let n1 = parts[1].trim().parse().map_err(|_| bad())?;
    let n2 = parts[2].trim().parse().map_err(|_| bad())?;
    Ok((m, n1, n2))
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn domain(err: eqhilb::Error) -> Self {
        Self { code: EXIT_DOMAIN, message: err.to_string() }
    }
}

fn variant(index: u8) -> Result<Variant, Failure> {
    Variant::from_index(index).map_err(|e| Failure::usage(e.to_string()))
}

fn action(args: &LocalArgs) -> Result<GroupActionSpec, Failure> {
    if args.m == 0 {
        return Err(Failure::usage("--M must be at least 1"));
    }
    GroupActionSpec::new(args.m, args.n, variant(args.variant)?).map_err(|e| Failure::usage(e.to_string()))
}

fn run_local(args: &LocalArgs) -> Result<String, Failure> {
    let spec = action(args)?;
    let s = local_series(&spec, args.support.into(), args.order);
    Ok(render::series(&s, args.output.euler, args.output.format))
}

fn run_log(args: &LocalArgs) -> Result<String, Failure> {
    let spec = action(args)?;
    let log = local_series(&spec, args.support.into(), args.order)
        .log()
        .map_err(Failure::domain)?;
    Ok(render::log(&log, args.output.euler, args.output.format))
}

fn run_closed_form(args: &ClosedFormArgs) -> Result<String, Failure> {
    let s: MotivicSeries = match args.formula {
        Formula::AType => {
            if args.m == 0 {
                return Err(Failure::usage("--M must be at least 1"));
            }
            closed_form_a_type(args.m, variant(args.variant)?, args.support.into(), args.order)
        }
        Formula::Conjecture31 => conjectured_product_3_1(args.order),
        Formula::Goettsche => goettsche_product(args.order),
    };
    Ok(render::series(&s, args.output.euler, args.output.format))
}

fn run_global(args: &GlobalArgs) -> Result<String, Failure> {
    let loaded = match (&args.config, &args.bundled) {
        (Some(path), _) => config::load(path),
        (None, Some(name)) => config::bundled(name),
        (None, None) => return Err(Failure::usage("give --config or --bundled")),
    };
    let mut spec = loaded.map_err(|e| Failure { code: EXIT_CONFIG, message: format!("config error: {e}") })?;
    if let Some(order) = args.order {
        spec = spec.with_order(order);
    }
    let s = eqhilb::assemble(&spec).map_err(Failure::domain)?;
    Ok(render::series(&s, args.output.euler, args.output.format))
}

fn run_verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let params = VerifyParams {
        order: args.order,
        moduli: args.moduli.clone(),
        pairs: args.pairs.clone(),
    };
    let report = verify::run(args.check, &params).map_err(|e| match e {
        eqhilb::Error::InvalidParameter(m) => Failure::usage(m),
        other => Failure::domain(other),
    })?;
    if let Some(c) = report.first_failure() {
        eprintln!(
            "mismatch in {}: {}\n  expected: {}\n  actual:   {}",
            args.check, c.label, c.expected, c.actual
        );
    }
    Ok((render::report(&report, args.format), report.passed()))
}

fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe downstream is not an error worth reporting.
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Local(a) => run_local(a).map(|t| (t, true)),
        Command::Log(a) => run_log(a).map(|t| (t, true)),
        Command::ClosedForm(a) => run_closed_form(a).map(|t| (t, true)),
        Command::Global(a) => run_global(a).map(|t| (t, true)),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok((text, ok)) => {
            emit(&text);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(f) => {
            eprintln!("eqhilb: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
