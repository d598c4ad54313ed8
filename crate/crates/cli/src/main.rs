use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divisor_core::arith::DivisorSieve;
use divisor_core::dsum::{registered, rhs_divisor_sum, TailMode};
use divisor_core::quad::QuadConfig;
use divisor_core::remainder::{a_of, decompose, TrigMode, TrigTable};
use divisor_core::zeta_afe::{afe_record_with, HurwitzTail, DEFAULT_EM_ORDER};
use divisor_core::Error;
use rayon::prelude::*;

mod output;

use output::{Cell, Format, Table};

const DECOMPOSITION_LIMIT: f64 = 1e-6;
const COTANGENT_LIMIT: f64 = 1e-10;
const PARTIAL_FRACTION_LIMIT: f64 = 1e-6;
const HYPERBOLA_LIMIT: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(name = "divisor-verify", version, about = "Numerical checks for the Dirichlet divisor problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate D(x), Δ(x) and the split Δ = A + B over a range of x.
    DeltaTable(DeltaTableArgs),
    /// Check the integer trigonometric formula for A(x) and the split of Δ(x).
    VerifyRemainder(VerifyRemainderArgs),
    /// Evaluate Σ_{a<n≤b} d(n) f(n) term by term and compare with the direct sum.
    EulerSum(EulerSumArgs),
    /// Tabulate the zeta tails E1, E2 and the residuals of their relations.
    AfeSweep(AfeSweepArgs),
}

#[derive(Debug, Args)]
struct SieveArgs {
    /// Largest n the divisor sieve may cover.
    #[arg(long, default_value_t = 1_000_000)]
    sieve_limit: u64,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DeltaTableArgs {
    #[arg(long, default_value_t = 1.0)]
    xmin: f64,
    #[arg(long)]
    xmax: f64,
    #[arg(long, default_value_t = 1.0)]
    step: f64,
    /// Accuracy requested for B(x).
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    sieve: SieveArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyRemainderArgs {
    #[arg(long, default_value_t = 2000)]
    xmax: u64,
    /// Skip the trigonometric formula and only check Δ = A + B.
    #[arg(long)]
    decomposition_only: bool,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    sieve: SieveArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TailArg {
    Sawtooth,
    Fourier,
}

impl From<TailArg> for TailMode {
    fn from(t: TailArg) -> Self {
        match t {
            TailArg::Sawtooth => TailMode::Sawtooth,
            TailArg::Fourier => TailMode::Fourier,
        }
    }
}

#[derive(Debug, Args)]
struct EulerSumArgs {
    /// One of: one, id, inv, log, expdecay.
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    b: f64,
    /// Quadrature tolerance (absolute and relative).
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = TailArg::Sawtooth)]
    tail_mode: TailArg,
    /// Fourier terms per modulus in fourier tail mode.
    #[arg(long, default_value_t = 1000)]
    fourier_terms: u64,
    /// Emit the breakdown as a one-row table instead of a text report.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    sieve: SieveArgs,
}

#[derive(Debug, Args)]
struct AfeSweepArgs {
    /// Comma-separated exponents, each > 0 and away from 1.
    #[arg(long, value_delimiter = ',', required = true)]
    s: Vec<f64>,
    /// Comma-separated cut-offs x > 0.
    #[arg(long, value_delimiter = ',', required = true)]
    x: Vec<f64>,
    #[command(flatten)]
    sieve: SieveArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// A failed command: message plus exit code (1 breach, 2 usage, 3 I/O).
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn breach(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Tolerance { .. } => 1,
            Error::Resource(_) => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: 3,
            message: format!("I/O error: {e}"),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::DeltaTable(args) => delta_table(args),
        Command::VerifyRemainder(args) => verify_remainder(args),
        Command::EulerSum(args) => euler_sum(args),
        Command::AfeSweep(args) => afe_sweep(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Sieve covering ⌊x_max⌋, checked against the configured limit first.
fn sieve_for(x_max: f64, args: &SieveArgs) -> Result<DivisorSieve, Failure> {
    if x_max > args.sieve_limit as f64 {
        return Err(Failure::usage(format!(
            "x = {x_max} exceeds the sieve limit {} (raise it with --sieve-limit)",
            args.sieve_limit
        )));
    }
    Ok(DivisorSieve::new(x_max.max(1.0).floor() as u64)?)
}

fn check_tol(tol: f64) -> Outcome {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Failure::usage(format!("tolerance must be positive, got {tol}")))
    }
}

fn delta_table(args: DeltaTableArgs) -> Outcome {
    check_tol(args.tol)?;
    if !(args.xmin >= 1.0) || !args.xmax.is_finite() {
        return Err(Failure::usage(format!("need xmin >= 1 and finite xmax, got {} and {}", args.xmin, args.xmax)));
    }
    if !(args.step > 0.0) {
        return Err(Failure::usage(format!("step must be positive, got {}", args.step)));
    }
    let count = if args.xmax < args.xmin {
        0
    } else {
        ((args.xmax - args.xmin) / args.step + 1e-9).floor() as u64 + 1
    };
    let xs: Vec<f64> = (0..count).map(|i| args.xmin + i as f64 * args.step).collect();
    let sieve = sieve_for(xs.last().copied().unwrap_or(1.0), &args.sieve)?;
    let rows = xs
        .par_iter()
        .map(|&x| decompose(x, &sieve, args.tol))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new(vec!["x", "D", "main_term", "delta", "A", "B", "residual"]);
    let mut worst = 0.0f64;
    for r in &rows {
        worst = worst.max(r.residual.abs());
        table.push(vec![
            Cell::Float(r.x),
            Cell::Int(r.d),
            Cell::Float(r.main_term),
            Cell::Float(r.delta),
            Cell::Float(r.a),
            Cell::Float(r.b),
            Cell::Float(r.residual),
        ]);
    }
    table.write(args.output.format, args.output.out.as_deref())?;
    if worst > DECOMPOSITION_LIMIT {
        return Err(Failure::breach(format!("max |residual| = {worst:e} exceeds {DECOMPOSITION_LIMIT:e}")));
    }
    Ok(())
}

fn verify_remainder(args: VerifyRemainderArgs) -> Outcome {
    check_tol(args.tol)?;
    if args.xmax == 0 {
        return Err(Failure::usage("xmax must be at least 1"));
    }
    let sieve = sieve_for(args.xmax as f64, &args.sieve)?;
    let mut breaches = Vec::new();

    let decomposition = (1..=args.xmax)
        .into_par_iter()
        .map(|x| decompose(x as f64, &sieve, args.tol).map(|r| r.residual.abs()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("decomposition    max |delta - A - B|  = {decomposition:.3e}  (x = 1..{})", args.xmax);
    if decomposition > DECOMPOSITION_LIMIT {
        breaches.push("decomposition");
    }

    if !args.decomposition_only && args.xmax >= 2 {
        let max_m = args.xmax.isqrt();
        for (label, mode, limit) in [
            ("cotangent", TrigMode::Cotangent, COTANGENT_LIMIT),
            ("partial fraction", TrigMode::PartialFraction(None), PARTIAL_FRACTION_LIMIT),
        ] {
            let table = TrigTable::new(max_m, mode)?;
            let (worst, imaginary) = (2..=args.xmax)
                .into_par_iter()
                .map(|x| {
                    table
                        .evaluate(x)
                        .map(|t| ((t.value - a_of(x as f64)).abs(), t.imaginary.abs()))
                })
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .fold((0.0f64, 0.0f64), |acc, v| (acc.0.max(v.0), acc.1.max(v.1)));
            println!(
                "{label:<16} max |A_trig - A|     = {worst:.3e}  (imaginary part {imaginary:.3e}, x = 2..{})",
                args.xmax
            );
            if worst > limit {
                breaches.push(label);
            }
        }
    }
    if breaches.is_empty() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Failure::breach(format!("threshold exceeded: {}", breaches.join(", "))))
    }
}

fn euler_sum(args: EulerSumArgs) -> Outcome {
    check_tol(args.tol)?;
    if args.fourier_terms == 0 {
        return Err(Failure::usage("fourier-terms must be at least 1"));
    }
    let f = registered(&args.function, args.a, args.b)?;
    let sieve = sieve_for(args.b, &args.sieve)?;
    let cfg = QuadConfig {
        fourier_terms: args.fourier_terms,
        ..QuadConfig::with_tol(args.tol)
    };
    let r = rhs_divisor_sum(&f, &sieve, &cfg, args.tail_mode.into())?;
    let allowed = 1e-6f64.max(10.0 * args.tol);

    match args.format {
        Some(format) => {
            let mut headers = vec!["function", "a", "b", "tail_mode", "lhs"];
            headers.extend(["t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"]);
            headers.extend(["rhs", "residual"]);
            let mut row = vec![
                Cell::Text(args.function.clone()),
                Cell::Float(r.lower),
                Cell::Float(r.upper),
                Cell::Text(r.tail_mode.to_string()),
                Cell::Float(r.lhs),
            ];
            row.extend(r.terms.iter().map(|&t| Cell::Float(t)));
            row.extend([Cell::Float(r.rhs_total), Cell::Float(r.residual)]);
            let mut table = Table::new(headers);
            table.push(row);
            table.write(format, args.out.as_deref())?;
        }
        None => {
            println!("f = {} on ({}, {}], tail mode {}", args.function, r.lower, r.upper, r.tail_mode);
            println!("lhs      = {:.16e}", r.lhs);
            for (i, t) in r.terms.iter().enumerate() {
                println!("t{}       = {t:.16e}", i + 1);
            }
            println!("rhs      = {:.16e}", r.rhs_total);
            println!("residual = {:.3e} (allowed {allowed:.1e})", r.residual);
        }
    }
    if r.residual.abs() > allowed {
        return Err(Failure::breach(format!("|residual| = {:e} exceeds {allowed:e}", r.residual.abs())));
    }
    Ok(())
}

fn afe_sweep(args: AfeSweepArgs) -> Outcome {
    let bad_s: Vec<String> = args
        .s
        .iter()
        .filter(|&&s| !(s > 0.0 && s.is_finite()) || (s - 1.0).abs() < 1e-3)
        .map(f64::to_string)
        .collect();
    if !bad_s.is_empty() {
        return Err(Failure::usage(format!(
            "s must be > 0 and not within 1e-3 of the pole at 1; rejected: {}",
            bad_s.join(", ")
        )));
    }
    let bad_x: Vec<String> = args
        .x
        .iter()
        .filter(|&&x| !(x > 0.0 && x.is_finite()))
        .map(f64::to_string)
        .collect();
    if !bad_x.is_empty() {
        return Err(Failure::usage(format!("x must be positive; rejected: {}", bad_x.join(", "))));
    }
    let x_max = args.x.iter().copied().fold(1.0, f64::max);
    let sieve = sieve_for(x_max, &args.sieve)?;

    let tails = args
        .s
        .iter()
        .map(|&s| HurwitzTail::new(s, DEFAULT_EM_ORDER))
        .collect::<Result<Vec<_>, _>>()?;
    let cells: Vec<(usize, f64)> = (0..tails.len())
        .flat_map(|i| args.x.iter().map(move |&x| (i, x)))
        .collect();
    let records = cells
        .par_iter()
        .map(|&(i, x)| afe_record_with(&tails[i], x, &sieve))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new(vec![
        "s",
        "x",
        "E1",
        "E2",
        "hyperbola_residual",
        "relation_residual",
        "scaled_residual",
    ]);
    let mut worst = 0.0f64;
    for r in &records {
        worst = worst.max(r.hyperbola_relative());
        table.push(vec![
            Cell::Float(r.s),
            Cell::Float(r.x),
            Cell::Float(r.e1),
            Cell::Float(r.e2),
            Cell::Float(r.hyperbola_residual),
            Cell::Float(r.relation_residual),
            Cell::Float(r.scaled_residual),
        ]);
    }
    table.write(args.output.format, args.output.out.as_deref())?;
    if worst > HYPERBOLA_LIMIT {
        return Err(Failure::breach(format!(
            "hyperbola residual {worst:e} (relative) exceeds {HYPERBOLA_LIMIT:e}"
        )));
    }
    Ok(())
}
