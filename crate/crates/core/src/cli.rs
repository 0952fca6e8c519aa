//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a counterexample, 2 on a
//! usage or I/O error, 3 when the bound check runs out of precision.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::partitions::{classic_table, cubic_table, cubic_table_mod, PartitionTable, TableKind};
use crate::report::{Status, VerificationReport};
use crate::verifier::{
    check_bound, check_inequality, check_injection, run_suite, scan_congruence, Claim, CongruenceClaim,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qpartition", version, about = "Cubic partition tables and exact series checks")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cubic,
    Classic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckTarget {
    Inequality,
    Bound,
    Injection,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a(n) or p(n) for 0 <= n < N
    Table {
        kind: Kind,
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Run one named series check, or `all`
    Verify {
        /// type-decomposition, eisenstein-factor, theta-forms, cubic-gf,
        /// lemma-products, jacobi, roots-product, eq3-reconstruction, or all
        claim: String,
        /// Truncation order; each claim has its own default
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check a(Mn + r) = 0 mod d for 0 <= n <= nmax
    Scan {
        #[arg(long = "m")]
        m: usize,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "d")]
        d: u64,
        #[arg(long, default_value_t = 1000)]
        nmax: usize,
    },
    /// Check the convexity inequality, the exp(π√n) bound, or the injection
    Check {
        target: CheckTarget,
        /// Largest n; defaults to 1000, or 18 for the injection
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 128)]
        precision_bits: usize,
    },
    /// Time the exact and modular cubic tables
    Bench {
        #[arg(long = "n", default_value_t = 20_000)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        mod_n: usize,
        #[arg(long, default_value_t = 3)]
        modulus: u64,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut file;
    let out: &mut dyn Write = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => stdout,
    };
    let code = match execute(&cli, out) {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::InternalInconsistency(_) | Error::NotRationalInteger(_) => EXIT_FAIL,
                _ => EXIT_USAGE,
            }
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: write failed: {e}");
            EXIT_USAGE
        }
    };
    if let Err(e) = out.flush() {
        let _ = writeln!(stderr, "error: write failed: {e}");
        return EXIT_USAGE;
    }
    code
}

enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Table { kind, n } => {
            let n = usize::try_from(*n).map_err(|_| Error::invalid("table length too large"))?;
            let table = match kind {
                Kind::Cubic => cubic_table(n)?,
                Kind::Classic => classic_table(n)?,
            };
            write_table(&table, cli.format, out)?;
            Ok(EXIT_PASS)
        }
        Command::Verify { claim, order } => {
            let claims = if claim == "all" { Claim::ALL.to_vec() } else { vec![claim.parse::<Claim>()?] };
            let reports = run_suite(&claims, *order)?;
            emit_reports(&reports, cli.format, out)
        }
        Command::Scan { m, r, d, nmax } => {
            let claim = CongruenceClaim::new(*m, *r, *d)?;
            emit_reports(&[scan_congruence(claim, *nmax)?], cli.format, out)
        }
        Command::Check { target, nmax, precision_bits } => {
            let report = match target {
                CheckTarget::Inequality => check_inequality(nmax.unwrap_or(1000))?,
                CheckTarget::Bound => check_bound(nmax.unwrap_or(1000), *precision_bits)?,
                CheckTarget::Injection => check_injection(nmax.unwrap_or(18))?,
            };
            emit_reports(&[report], cli.format, out)
        }
        Command::Bench { n, mod_n, modulus } => {
            let start = Instant::now();
            cubic_table(*n)?;
            let exact = start.elapsed();
            let start = Instant::now();
            cubic_table_mod(*mod_n, *modulus)?;
            let modular = start.elapsed();
            writeln!(out, "cubic_table({n}): {} ms", exact.as_millis())?;
            writeln!(out, "cubic_table_mod({mod_n}, {modulus}): {} ms", modular.as_millis())?;
            Ok(EXIT_PASS)
        }
    }
}

#[derive(Serialize)]
struct TableJson<'a> {
    kind: &'a str,
    values: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    /// Decimal string, so values of any size survive JSON parsers.
    value: String,
}

fn write_table<V: Display>(table: &PartitionTable<V>, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Text => {
            let name = if table.kind() == TableKind::Cubic { "a" } else { "p" };
            for (n, v) in table.values().iter().enumerate() {
                writeln!(out, "{name}({n}) = {v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "value"])?;
            for (n, v) in table.values().iter().enumerate() {
                w.write_record([n.to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let values = table.values().iter().enumerate().map(|(n, v)| TableRow { n, value: v.to_string() }).collect();
            serde_json::to_writer_pretty(&mut *out, &TableJson { kind: table.kind().as_str(), values })?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// 1 if any report failed, else 3 if any ran out of precision, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status() == Status::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.status() == Status::FailPrecision) {
        EXIT_PRECISION
    } else {
        EXIT_PASS
    }
}

fn emit_reports(reports: &[VerificationReport], format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{:<14} {} ({}) {} ms",
                    r.status().as_str().to_uppercase(),
                    r.claim(),
                    r.range(),
                    r.elapsed_ms()
                )?;
                if let Some(ratio) = r.max_ratio() {
                    writeln!(out, "  max ln a(n)/(π√n) = {ratio:.12}")?;
                }
                if let Some(ce) = r.counterexample() {
                    writeln!(out, "  first counterexample at n = {}: {}", ce.n, ce.witness)?;
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["claim", "status", "range", "counterexample_n", "elapsed_ms"])?;
            for r in reports {
                let ce = r.counterexample().map(|c| c.n.to_string()).unwrap_or_default();
                w.write_record([r.claim(), r.status().as_str(), r.range(), &ce, &r.elapsed_ms().to_string()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            writeln!(out)?;
        }
    }
    Ok(exit_code(reports))
}
