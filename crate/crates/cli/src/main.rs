//! `prolate`: build and cache prolate bases, run the self-check suites and
//! regenerate the numerical experiments as CSV or JSON.
//!
//! Exit codes: 0 success, 1 failed check or numerical failure, 2 usage error.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use prolate::checks::{self, Suite};
use prolate::reproduce::{self, TABLE1_N, TABLE1_S};
use prolate::{Error, PswfBasis};

/// Bumped whenever a CSV column is added, removed or reinterpreted.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "prolate", version, about = "Prolate spheroidal wave functions and spectral approximation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a basis, print `n,chi,lambda,ln_lambda` and write the JSON cache.
    ///
    /// Without --out the cache goes to $PROLATE_CACHE_DIR when set, and an
    /// existing cache there is loaded instead of rebuilt.
    Basis {
        /// Bandwidth c >= 0.
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        /// Highest order kept.
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "PROLATE_CACHE_DIR", hide_env_values = true)]
        cache_dir: Option<PathBuf>,
    },
    /// Regenerate a numerical experiment.
    ///
    /// Every CSV starts with a `# schema=<v> ...` comment line. Columns:
    ///
    ///   example1: lambda,n,legendre_error,pswf_error
    ///     e^{iλx} with λ = c, truncated after order N, in the Legendre basis and in the prolate basis of bandwidth λ.
    ///
    ///   table1: n,s,grid_error
    ///     lacunary cosine series Σ 2^{-ks} cos(2^k x), bandwidth c, partial sums through order n.
    ///
    ///   example3: n,actual,bound,lambda
    ///     periodic lacunary series Σ 2^{-ks} cos(2^k π x), actual grid error against the periodic-Sobolev bound, N = 0..=--N.
    ///
    ///   example4: x,value,approx
    ///     random cosine series with weights N(0,1)/k^{s+1/2}, sampled with its partial sum through order N at --grid points.
    #[command(verbatim_doc_comment)]
    Reproduce {
        #[arg(value_enum)]
        experiment: Experiment,
        /// Bandwidth; defaults to 50 for example1 and 100 otherwise.
        #[arg(long, allow_negative_numbers = true)]
        c: Option<f64>,
        /// Highest order; defaults to 50 (example1), 100 (example3), 80 (example4); table1 uses 20, 30, ..., 100.
        #[arg(long = "N", alias = "n-max")]
        n: Option<usize>,
        /// Smoothness; defaults to 1.4 (example3), 1.0 (example4); table1 uses 0.75, 1.0, ..., 2.0.
        #[arg(long, allow_negative_numbers = true)]
        s: Option<f64>,
        /// Seed of the random series.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sample points for example4.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a self-check suite; exits with 1 when a hard check fails.
    Check {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Count failed diagnostics as failures.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Experiment {
    Example1,
    Table1,
    Example3,
    Example4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::Domain { .. } | Error::InvalidInput(_) | Error::IndexOutOfRange { .. })
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Basis {
            c,
            n_max,
            out,
            cache_dir,
        } => basis(c, n_max, out, cache_dir),
        Command::Reproduce {
            experiment,
            c,
            n,
            s,
            seed,
            grid,
            format,
            out,
        } => {
            let text = match experiment {
                Experiment::Example1 => example1(c.unwrap_or(50.0), n.unwrap_or(50), format)?,
                Experiment::Table1 => table1(c.unwrap_or(100.0), n, s, format)?,
                Experiment::Example3 => example3(c.unwrap_or(100.0), n.unwrap_or(100), s.unwrap_or(1.4), format)?,
                Experiment::Example4 => {
                    let e = reproduce::example4(
                        c.unwrap_or(100.0),
                        n.unwrap_or(80),
                        s.unwrap_or(1.0),
                        seed,
                        prolate::corpus::DEFAULT_K_MAX,
                        grid,
                    )?;
                    render(format, &e, "example4", &["x", "value", "approx"], |rows| {
                        for i in 0..e.x.len() {
                            rows.push(vec![num(e.x[i]), num(e.value[i]), num(e.approx[i])]);
                        }
                    })?
                }
            };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { suite, strict } => {
            let report = checks::run(suite)?;
            for line in &report.lines {
                let verdict = match (line.passed, line.hard) {
                    (true, _) => "ok  ",
                    (false, true) => "FAIL",
                    (false, false) if strict => "FAIL",
                    (false, false) => "warn",
                };
                println!("{verdict} {}: {}", line.name, line.detail);
            }
            for table in &report.tables {
                print!("{table}");
            }
            Ok(if report.ok(strict) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn cache_name(c: f64, n_max: usize) -> String {
    format!("basis_c{c}_n{n_max}.json")
}

fn basis(c: f64, n_max: usize, out: Option<PathBuf>, cache_dir: Option<PathBuf>) -> Result<ExitCode> {
    let cached = cache_dir.as_ref().map(|d| d.join(cache_name(c, n_max)));
    let b = match &cached {
        Some(path) if out.is_none() && path.exists() => {
            PswfBasis::load(path).with_context(|| format!("loading {}", path.display()))?
        }
        _ => PswfBasis::new(c, n_max)?,
    };
    let target = out.or(cached);
    if let Some(path) = &target {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        b.save(path).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["n", "chi", "lambda", "ln_lambda"])?;
    for n in 0..=n_max {
        let (lambda, ln_lambda) = if c > 0.0 {
            (b.lambda(n)?.to_string(), b.ln_lambda(n)?.to_string())
        } else {
            // every λ_n is 0 at zero bandwidth
            (String::new(), String::new())
        };
        w.write_record([n.to_string(), b.chi(n)?.to_string(), lambda, ln_lambda])?;
    }
    w.flush()?;
    if let Some(path) = target {
        eprintln!("cache written to {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn example1(c: f64, n: usize, format: Format) -> Result<String> {
    let e = reproduce::example1(c, n)?;
    render(format, &e, "example1", &["lambda", "n", "legendre_error", "pswf_error"], |rows| {
        rows.push(vec![num(e.lambda), e.n.to_string(), num(e.legendre_error), num(e.pswf_error)]);
    })
}

fn table1(c: f64, n: Option<usize>, s: Option<f64>, format: Format) -> Result<String> {
    let ns: Vec<usize> = n.map_or(TABLE1_N.to_vec(), |n| vec![n]);
    let ss: Vec<f64> = s.map_or(TABLE1_S.to_vec(), |s| vec![s]);
    let t = reproduce::table1(c, &ns, &ss)?;
    render(format, &t, "table1", &["n", "s", "grid_error"], |rows| {
        for (i, &n) in t.ns.iter().enumerate() {
            for (j, &s) in t.ss.iter().enumerate() {
                rows.push(vec![n.to_string(), s.to_string(), num(t.cells[i][j])]);
            }
        }
    })
}

fn example3(c: f64, n: usize, s: f64, format: Format) -> Result<String> {
    let ns: Vec<usize> = (0..=n).collect();
    let e = reproduce::example3(c, s, &ns)?;
    render(format, &e, "example3", &["n", "actual", "bound", "lambda"], |rows| {
        for r in &e.rows {
            rows.push(vec![r.n.to_string(), num(r.actual), num(r.bound), num(r.lambda)]);
        }
    })
}

/// Scientific notation with enough digits to round-trip.
fn num(v: f64) -> String {
    format!("{v:e}")
}

/// CSV with a schema comment line, or the pretty-printed JSON of `value`.
fn render<T: serde::Serialize>(
    format: Format,
    value: &T,
    name: &str,
    header: &[&str],
    fill: impl FnOnce(&mut Vec<Vec<String>>),
) -> Result<String> {
    if format == Format::Json {
        let doc = serde_json::json!({ "schema": SCHEMA_VERSION, "experiment": name, "data": value });
        return Ok(serde_json::to_string_pretty(&doc)? + "\n");
    }
    let mut rows = Vec::new();
    fill(&mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let body = String::from_utf8(w.into_inner()?)?;
    Ok(format!("# schema={SCHEMA_VERSION} experiment={name}\n{body}"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .with_context(|| format!("writing {}", path.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}
