//! fibmul: compute, verify, benchmark, and inspect multiple-index Fibonacci,
//! Lucas, and generalized Fibonacci identities.
//!
//! Exit codes: 0 on success, 1 when a verification sweep found failures,
//! 2 for usage errors. Results go to stdout (or `--out PATH`); diagnostics
//! go to stderr. Big integers cross the boundary as plain decimal strings.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use thiserror::Error;

use fibmul_core::{
    bench_compare, fib, fib_fast_doubling, fib_multiple, fib_multiple_table, gen_fib, gen_multiple,
    gen_multiple_table, lucas, lucas_multiple, lucas_multiple_table, report_render, standard_seeds,
    sweep_verify, GeneralizedSeed, MultipleIndexQuery, OutputFormat, ReportBody, SeqIndex,
    SeqValue, SweepConfig, Target, TheoremTable, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "fibmul",
    version,
    about = "Exact F(n*m), L(n*m), and G(n*m) via binomial sums in Lucas-number powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one sequence term as a decimal integer
    Compute {
        #[command(subcommand)]
        form: ComputeForm,
    },
    /// Sweep identity evaluators against independent oracles over index grids
    Verify(VerifyArgs),
    /// Time the three F(n*m) strategies on one input (values checked equal first)
    Bench(BenchArgs),
    /// Print the summand-by-summand breakdown of one identity
    Table(TableArgs),
}

/// Evaluation path: the multiple-index identity or the plain oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Identity,
    Oracle,
}

#[derive(Subcommand)]
enum ComputeForm {
    /// F(n*m): identity = Lucas-power sum, oracle = fast doubling
    FibNm {
        #[arg(long)]
        n: SeqIndex,
        #[arg(long)]
        m: SeqIndex,
        #[arg(long, value_enum, default_value_t = Via::Identity)]
        via: Via,
    },
    /// L(n*m): identity = Lucas-power sum, oracle = iterative recurrence
    LucasNm {
        #[arg(long)]
        n: SeqIndex,
        #[arg(long)]
        m: SeqIndex,
        #[arg(long, value_enum, default_value_t = Via::Identity)]
        via: Via,
    },
    /// G(n*m) for seed (g0, g1): identity = Lucas-power sums, oracle = recurrence
    GenNm {
        #[arg(long, allow_negative_numbers = true)]
        g0: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        g1: BigInt,
        #[arg(long)]
        n: SeqIndex,
        #[arg(long)]
        m: SeqIndex,
        #[arg(long, value_enum, default_value_t = Via::Identity)]
        via: Via,
    },
    /// F(k) for any integer k: oracle = iterative recurrence, identity = fast doubling
    Fib {
        #[arg(long, allow_negative_numbers = true)]
        k: SeqIndex,
        #[arg(long, value_enum, default_value_t = Via::Oracle)]
        via: Via,
    },
    /// L(k) for any integer k: oracle = iterative recurrence, identity = 2F(k+1) - F(k)
    Lucas {
        #[arg(long, allow_negative_numbers = true)]
        k: SeqIndex,
        #[arg(long, value_enum, default_value_t = Via::Oracle)]
        via: Via,
    },
}

#[derive(Args)]
struct ReportOpts {
    /// Output format: text, json, or csv
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Write the document to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated targets: theorem1|t1, theorem2|t2, theorem3|t3, docagne, waring
    #[arg(long, value_delimiter = ',', required = true, value_name = "LIST")]
    targets: Vec<Target>,
    /// Theorem grids sweep n in 1..=n-max; docagne sweeps a in -n-max..=n-max
    #[arg(long)]
    n_max: SeqIndex,
    /// Theorem grids sweep m in 1..=m-max; docagne sweeps b in -m-max..=m-max
    #[arg(long)]
    m_max: SeqIndex,
    /// Seeds file for theorem3, one `g0,g1` pair per line (default: built-in set)
    #[arg(long, value_name = "FILE")]
    seeds: Option<PathBuf>,
    /// Stop at the first failing case
    #[arg(long)]
    fail_fast: bool,
    #[command(flatten)]
    report: ReportOpts,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    n: SeqIndex,
    #[arg(long)]
    m: SeqIndex,
    /// Timed repetitions per strategy; the median is reported
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[command(flatten)]
    report: ReportOpts,
}

#[derive(Args)]
struct TableArgs {
    /// Identity to expand: 1 = F(n*m), 2 = L(n*m), 3 = G(n*m)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    theorem: u8,
    #[arg(long)]
    n: SeqIndex,
    #[arg(long)]
    m: SeqIndex,
    /// Seed G(0) (theorem 3 only)
    #[arg(long, allow_negative_numbers = true)]
    g0: Option<BigInt>,
    /// Seed G(1) (theorem 3 only)
    #[arg(long, allow_negative_numbers = true)]
    g1: Option<BigInt>,
    #[command(flatten)]
    report: ReportOpts,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] fibmul_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read seeds file {path}: {source}")]
    SeedsIo { path: PathBuf, source: io::Error },
    #[error("cannot write {path}: {source}")]
    OutIo { path: PathBuf, source: io::Error },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Compute { form } => {
            println!("{}", compute_value(form)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(args),
        Command::Bench(args) => run_bench(args),
        Command::Table(args) => run_table(args),
    }
}

fn checked_product(n: SeqIndex, m: SeqIndex) -> Result<SeqIndex, CliError> {
    if n < 1 || m < 1 {
        return Err(CliError::Usage(format!(
            "indices must be positive, got n = {n}, m = {m}"
        )));
    }
    n.checked_mul(m)
        .ok_or_else(|| CliError::Usage(format!("index product {n}*{m} overflows")))
}

fn compute_value(form: ComputeForm) -> Result<SeqValue, CliError> {
    Ok(match form {
        ComputeForm::FibNm { n, m, via } => match via {
            Via::Identity => fib_multiple(&MultipleIndexQuery::new(n, m))?,
            Via::Oracle => fib_fast_doubling(checked_product(n, m)?),
        },
        ComputeForm::LucasNm { n, m, via } => match via {
            Via::Identity => lucas_multiple(&MultipleIndexQuery::new(n, m))?,
            Via::Oracle => lucas(checked_product(n, m)?),
        },
        ComputeForm::GenNm { g0, g1, n, m, via } => {
            let seed = GeneralizedSeed::new(g0, g1);
            match via {
                Via::Identity => gen_multiple(&seed, &MultipleIndexQuery::new(n, m))?,
                Via::Oracle => gen_fib(&seed, checked_product(n, m)?)?,
            }
        }
        ComputeForm::Fib { k, via } => match via {
            Via::Oracle => fib(k),
            Via::Identity => fib_fast_doubling(k),
        },
        ComputeForm::Lucas { k, via } => match via {
            Via::Oracle => lucas(k),
            Via::Identity => {
                let next = k
                    .checked_add(1)
                    .ok_or_else(|| CliError::Usage(format!("index {k} + 1 overflows")))?;
                2 * fib_fast_doubling(next) - fib_fast_doubling(k)
            }
        },
    })
}

/// Theorem grids and the d'Ocagne grid have different shapes (the residual
/// takes negative indices), so a mixed target set runs as one sweep per run
/// of same-shaped targets, merged into a single report. Report rows follow
/// the order targets were first mentioned.
fn run_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let seeds = match &args.seeds {
        Some(path) => parse_seeds_file(path)?,
        None => standard_seeds(),
    };
    let mut chunks: Vec<Vec<Target>> = Vec::new();
    let mut seen: Vec<Target> = Vec::new();
    for &target in &args.targets {
        if seen.contains(&target) {
            continue;
        }
        seen.push(target);
        let breaks_run =
            target == Target::Docagne || chunks.last().is_none_or(|run| run[0] == Target::Docagne);
        if breaks_run {
            chunks.push(vec![target]);
        } else {
            chunks.last_mut().expect("checked nonempty").push(target);
        }
    }

    let mut report: Option<VerificationReport> = None;
    for targets in chunks {
        if args.fail_fast && report.as_ref().is_some_and(|r| !r.all_passed()) {
            break;
        }
        let config = if targets[0] == Target::Docagne {
            SweepConfig {
                n_range: -args.n_max..=args.n_max,
                m_range: -args.m_max..=args.m_max,
                seeds: Vec::new(),
                targets,
                fail_fast: args.fail_fast,
            }
        } else {
            SweepConfig {
                n_range: 1..=args.n_max,
                m_range: 1..=args.m_max,
                seeds: seeds.clone(),
                targets,
                fail_fast: args.fail_fast,
            }
        };
        let part = sweep_verify(&config)?;
        report = Some(match report {
            None => part,
            Some(merged) => merged.merge(part),
        });
    }
    let report = report.expect("clap requires at least one target");

    emit(
        &report_render(&ReportBody::Verification(&report), args.report.format),
        &args.report.out,
    )?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_seeds_file(path: &Path) -> Result<Vec<GeneralizedSeed>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::SeedsIo {
        path: path.to_path_buf(),
        source,
    })?;
    let mut seeds = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let location = format!("{}:{}", path.display(), index + 1);
        let (g0, g1) = line.split_once(',').ok_or_else(|| {
            CliError::Usage(format!("{location}: expected `g0,g1`, got `{line}`"))
        })?;
        let parse = |part: &str| {
            part.trim().parse::<BigInt>().map_err(|_| {
                CliError::Usage(format!(
                    "{location}: `{}` is not a decimal integer",
                    part.trim()
                ))
            })
        };
        seeds.push(GeneralizedSeed::new(parse(g0)?, parse(g1)?));
    }
    if seeds.is_empty() {
        return Err(CliError::Usage(format!(
            "seeds file {} contains no seeds",
            path.display()
        )));
    }
    Ok(seeds)
}

fn run_bench(args: BenchArgs) -> Result<ExitCode, CliError> {
    let records = bench_compare(args.n, args.m, args.reps)?;
    emit(
        &report_render(&ReportBody::Bench(&records), args.report.format),
        &args.report.out,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn run_table(args: TableArgs) -> Result<ExitCode, CliError> {
    let query = MultipleIndexQuery::new(args.n, args.m);
    let table = match args.theorem {
        1 | 2 => {
            if args.g0.is_some() || args.g1.is_some() {
                return Err(CliError::Usage("--g0/--g1 apply to theorem 3 only".into()));
            }
            if args.theorem == 1 {
                fib_multiple_table(&query)?
            } else {
                lucas_multiple_table(&query)?
            }
        }
        3 => {
            let (Some(g0), Some(g1)) = (args.g0, args.g1) else {
                return Err(CliError::Usage("theorem 3 requires --g0 and --g1".into()));
            };
            gen_multiple_table(&GeneralizedSeed::new(g0, g1), &query)?
        }
        _ => unreachable!("clap restricts --theorem to 1..=3"),
    };
    let document = match args.report.format {
        OutputFormat::Text => render_table_text(&table),
        OutputFormat::Json => {
            serde_json::to_string_pretty(&table).expect("table serialization cannot fail")
        }
        OutputFormat::Csv => render_table_csv(&table),
    };
    emit(&document, &args.report.out)?;
    Ok(ExitCode::SUCCESS)
}

fn render_table_text(table: &TheoremTable) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theorem {}: n = {}, m = {}, L({}) = {}",
        table.theorem, table.n, table.m, table.n, table.lucas_base
    );
    for part in &table.parts {
        let _ = writeln!(out, "part {} = {}:", part.scale_label, part.scale);
        let _ = writeln!(
            out,
            "  {:>4} {:>14} {:>8} {:>5} {:>20}",
            "i", "coefficient", "L-power", "sign", "value"
        );
        for term in &part.terms {
            let _ = writeln!(
                out,
                "  {:>4} {:>14} {:>8} {:>+5} {:>20}",
                term.i,
                term.coefficient.to_string(),
                term.lucas_power,
                term.sign,
                term.value.to_string()
            );
        }
        let _ = writeln!(out, "  subtotal: {}", part.subtotal);
    }
    let _ = writeln!(out, "total: {}", table.total);
    out
}

fn render_table_csv(table: &TheoremTable) -> String {
    let mut out = String::from("part,i,coefficient,lucas_power,sign,value\n");
    for part in &table.parts {
        for term in &part.terms {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                part.scale_label, term.i, term.coefficient, term.lucas_power, term.sign, term.value
            );
        }
    }
    out
}

fn emit(document: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    let text = if document.ends_with('\n') {
        document.to_string()
    } else {
        format!("{document}\n")
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::OutIo {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
