use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use dirfac::assembly::{full_construct_with, Options};
use dirfac::construct_g::g_factorization;
use dirfac::construct_h::h_factorization;
use dirfac::construct_l::{l_factorization, Certificate, Verdict};
use dirfac::io::{self, Format};
use dirfac::reduction::reduce_3m;
use dirfac::selftest::{self, Config};
use dirfac::solver::{solve_base, SolveOptions};
use dirfac::verifier::{certify, verify_mendelsohn};
use dirfac::{Error, Exec, Factorization};

const EXIT_IO: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_NONEXISTENT: u8 = 3;
const EXIT_INVALID: u8 = 4;

#[derive(Parser)]
#[command(name = "factorizer", version, about = "Directed m-cycle factorizations of K*_2m")]
struct Cli {
    /// Run independent pieces one after another.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    H,
    L,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Build, verify and write a factorization of K*_2m into directed m-cycles.
    Construct {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Emit the factorization of one of the H, L, G pieces on its own.
    Component {
        part: Part,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Check a factorization file against the digraph its kind names.
    Verify {
        path: PathBuf,
        /// Also run the ordered-pair design check.
        #[arg(long)]
        mendelsohn: bool,
    },
    /// Turn a factorization of K*_2m into m-cycles into one of K*_6m into 3m-cycles.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Search for a base-order factorization (m = 5, 7, 9, 11).
    Solve {
        #[arg(long)]
        m: u32,
        /// Seconds; unlimited when absent.
        #[arg(long)]
        timeout: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Return the bundled file when one exists instead of searching.
        #[arg(long)]
        bundled: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Run the acceptance checks.
    Selftest {
        #[arg(long, default_value_t = 49)]
        max_m: u32,
    },
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os("FACTORIZER_DATA").map(PathBuf::from)
}

fn exec(cli: &Cli) -> Exec {
    if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn emit(fac: &Factorization, out: Option<&Path>, format: FormatArg) -> anyhow::Result<()> {
    let text = io::render(fac, format.into());
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes()).context("writing to stdout")?,
    }
    Ok(())
}

fn print_certificate(c: &Certificate) {
    println!("no L factorization for m={}: every (k1, k2) row fails", c.m);
    println!("{:>4} {:>4} {:>6}  verdict", "k1", "k2", "sum");
    for r in &c.rows {
        let why = match &r.verdict {
            Verdict::NotMultiple => "sum not a multiple of m".to_string(),
            Verdict::NoDifferenceThree => "no difference-3 arc".to_string(),
            Verdict::Revisits { period, visits } => format!("difference 3 returns every {period} steps, {visits} visits on 2 layers"),
            Verdict::Feasible => "feasible".to_string(),
        };
        println!("{:>4} {:>4} {:>6}  {why}", r.k1, r.k2, r.arc_sum);
    }
}

// The library's error, if any, decides the exit code.
fn exit_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::LNonExistence(c)) => {
            print_certificate(c);
            EXIT_NONEXISTENT
        }
        Some(Error::Unsupported { .. } | Error::NonExistent { .. }) => EXIT_UNSUPPORTED,
        Some(Error::Io(_) | Error::Parse { .. }) => EXIT_IO,
        Some(_) => EXIT_INVALID,
        None => EXIT_IO,
    }
}

fn check(fac: &Factorization) -> anyhow::Result<()> {
    let r = certify(fac);
    if !r.is_ok() {
        return Err(anyhow::Error::new(Error::Construction(r.to_string())).context("output failed verification"));
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Construct { m, out, format } => {
            let opts = Options { exec: exec(cli), data_dir: data_dir() };
            let fac = full_construct_with(*m, &opts).map_err(|e| match e {
                Error::Unsupported { .. } => anyhow::Error::new(e).context("covered orders are odd m >= 5 except the exception (2,3)"),
                e => anyhow::Error::new(e),
            })?;
            check(&fac)?;
            emit(&fac, out.as_deref(), *format)?;
        }
        Command::Component { part, m, out, format } => {
            let fac = match part {
                Part::H => h_factorization(*m),
                Part::L => l_factorization(*m),
                Part::G => g_factorization(*m),
            }?;
            check(&fac)?;
            emit(&fac, out.as_deref(), *format)?;
        }
        Command::Verify { path, mendelsohn } => {
            let fac = io::read_file(path).with_context(|| format!("reading {}", path.display()))?;
            let mut report = certify(&fac);
            if *mendelsohn {
                for v in verify_mendelsohn(&fac).violations {
                    if !report.violations.contains(&v) {
                        report.violations.push(v);
                    }
                }
            }
            println!("{report}");
            if !report.is_ok() {
                return Ok(EXIT_INVALID);
            }
        }
        Command::Reduce { input, out, format } => {
            let fac = io::read_file(input).with_context(|| format!("reading {}", input.display()))?;
            let big = reduce_3m(&fac, exec(cli))?;
            check(&big)?;
            emit(&big, out.as_deref(), *format)?;
        }
        Command::Solve { m, timeout, seed, bundled, out, format } => {
            let opts = SolveOptions {
                timeout: timeout.map(Duration::from_secs),
                seed: *seed,
                use_bundled: *bundled,
                data_dir: data_dir(),
            };
            let fac = solve_base(*m, &opts)?;
            emit(&fac, out.as_deref(), *format)?;
        }
        Command::Selftest { max_m } => {
            let cfg = Config { max_m: *max_m, data_dir: data_dir(), exec: exec(cli), ..Config::default() };
            let outcomes = selftest::run_all(&cfg);
            for o in &outcomes {
                println!("{o}");
            }
            if outcomes.iter().any(|o| !o.pass) {
                return Ok(EXIT_INVALID);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = exit_for(&e);
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
