//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors, malformed input and exhausted budgets.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::adic::orbit_with;
use crate::budget::Budget;
use crate::encoding::{decode, encode, transport, EncodingSequence};
use crate::error::Error;
use crate::eulerian::{closed_form, recurrence_table_with, Offset, Vertex};
use crate::good::{count_good_dp_with, count_good_enumeration_with, LabelScheme};
use crate::path::EulerPath;
use crate::ratio::{convergence_report, ratio_of, to_significant, Exact};
use crate::verify::{self, Suite, Window};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DECIMAL_DIGITS: usize = 15;

#[derive(Debug, Parser)]
#[command(name = "euler-adic", version, about = "Exact path counts and the adic map on the Euler graph")]
struct Cli {
    /// Cell budget for count tables and the good-path DP.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_CELLS)]
    max_cells: u64,

    /// Path budget for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_ENUM)]
    max_enum: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Dp,
    Enum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Recurrence,
    Closedform,
    Monotonicity,
    Identity,
    Goodcount,
    Bijection,
    Orbit,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Recurrence => Suite::Recurrence,
            SuiteArg::Closedform => Suite::ClosedForm,
            SuiteArg::Monotonicity => Suite::Monotonicity,
            SuiteArg::Identity => Suite::Identity,
            SuiteArg::Goodcount => Suite::GoodCount,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Orbit => Suite::Orbit,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grid of A_{p,q}(i,j).
    Table {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        imax: usize,
        #[arg(long)]
        jmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run an invariant suite and print one PASS/FAIL line per case.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        pmax: usize,
        #[arg(long, default_value_t = 2)]
        qmax: usize,
        #[arg(long, default_value_t = 6)]
        imax: usize,
        #[arg(long, default_value_t = 6)]
        jmax: usize,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// dim(P, P+(k,k)) / dim(R, P+(k,k)) against 1/(p+q+1)!, as CSV.
    Converge {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Largest diagonal offset k.
        #[arg(long)]
        diag: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        step: u64,
        /// Add 15-significant-digit decimal columns.
        #[arg(long)]
        decimal: bool,
    },
    /// Good-path count G, total count A and G/A.
    Good {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "dp")]
        method: Method,
    },
    /// Move a good path to another base of the same level.
    Transport {
        #[arg(long, value_parser = parse_pair)]
        from: Vertex,
        #[arg(long, value_parser = parse_pair)]
        to: Vertex,
        #[arg(long)]
        path: String,
    },
    /// All root paths to a vertex in adic order.
    Orbit {
        #[arg(long, value_parser = parse_pair)]
        vertex: Vertex,
    },
    /// Encoding sequence of a path relative to its own start.
    Encode {
        #[arg(long)]
        path: String,
    },
    /// Path from a base with the given encoding sequence.
    Decode {
        #[arg(long, value_parser = parse_pair)]
        base: Vertex,
        #[arg(long)]
        code: String,
    },
}

fn parse_pair(s: &str) -> Result<Vertex, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    let x = a.trim().parse().map_err(|_| format!("bad coordinate {a:?}"))?;
    let y = b.trim().parse().map_err(|_| format!("bad coordinate {b:?}"))?;
    Ok(Vertex::new(x, y))
}

enum Failure {
    Verify,
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let budget = Budget::default()
        .with_max_cells(cli.max_cells)
        .with_max_enum(cli.max_enum);
    match execute(cli.command, &budget, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, budget: &Budget, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Table {
            p,
            q,
            imax,
            jmax,
            format,
        } => {
            let table = recurrence_table_with(Vertex::new(p, q), imax, jmax, budget)?;
            match format {
                Format::Csv => {
                    writeln!(out, "i,j,count")?;
                    for (off, count) in table.iter() {
                        writeln!(out, "{},{},{count}", off.di, off.dj)?;
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = table
                        .iter()
                        .map(|(off, count)| {
                            serde_json::json!({"i": off.di, "j": off.dj, "count": count.to_string()})
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "params": {"p": p, "q": q, "imax": imax, "jmax": jmax},
                        "rows": rows,
                    });
                    writeln!(out, "{doc}")?;
                }
            }
        }
        Command::Verify {
            suite,
            pmax,
            qmax,
            imax,
            jmax,
            nmax,
        } => {
            let window = Window {
                pmax,
                qmax,
                imax,
                jmax,
                nmax,
            };
            let report = verify::run(suite.into(), &window, budget)?;
            for case in &report.cases {
                writeln!(out, "{case}")?;
            }
            for note in &report.notes {
                writeln!(out, "{note}")?;
            }
            let failed = report.cases.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} passed, {failed} failed", report.cases.len() - failed)?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::Converge {
            p,
            q,
            diag,
            step,
            decimal,
        } => {
            let samples: Vec<Offset> = (step as usize..=diag)
                .step_by(step as usize)
                .map(|k| Offset::new(k, k))
                .collect();
            let rows = convergence_report(Vertex::new(p, q), &samples)?;
            if decimal {
                writeln!(out, "k,ratio,target,gap,ratio_decimal,gap_decimal")?;
            } else {
                writeln!(out, "k,ratio,target,gap")?;
            }
            for rec in rows {
                write!(
                    out,
                    "{},{},{},{}",
                    rec.off.di,
                    Exact(&rec.ratio),
                    Exact(&rec.target),
                    Exact(&rec.abs_gap)
                )?;
                if decimal {
                    write!(
                        out,
                        ",{},{}",
                        to_significant(&rec.ratio, DECIMAL_DIGITS),
                        to_significant(&rec.abs_gap, DECIMAL_DIGITS)
                    )?;
                }
                writeln!(out)?;
            }
        }
        Command::Good { p, q, i, j, method } => {
            let base = Vertex::new(p, q);
            let off = Offset::new(i, j);
            let good = match method {
                Method::Dp => count_good_dp_with(base, off, budget)?,
                Method::Enum => count_good_enumeration_with(base, off, budget)?,
            };
            let all = closed_form(base, off);
            writeln!(out, "G={good} A={all} G/A={}", Exact(&ratio_of(&good, &all)))?;
        }
        Command::Transport { from, to, path } => {
            let path: EulerPath = path.parse()?;
            let src = LabelScheme::new(from);
            let moved = transport(&src, &LabelScheme::new(to), &path)?;
            writeln!(out, "{moved}")?;
            writeln!(out, "{}", encode(&src, &path)?)?;
        }
        Command::Orbit { vertex } => {
            for path in orbit_with(vertex, budget)? {
                writeln!(out, "{path}")?;
            }
        }
        Command::Encode { path } => {
            let path: EulerPath = path.parse()?;
            writeln!(out, "{}", encode(&LabelScheme::new(path.start), &path)?)?;
        }
        Command::Decode { base, code } => {
            let code: EncodingSequence = code.parse()?;
            writeln!(out, "{}", decode(&LabelScheme::new(base), &code)?)?;
        }
    }
    Ok(())
}
