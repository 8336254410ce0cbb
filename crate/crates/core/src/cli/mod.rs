//! The `phipade` command-line front end.
//!
//! Exit status is 0 on success, 1 on a numerical failure (the error name is
//! printed) and 2 on malformed input.

mod grid;
mod manifest;
mod reproduce;
mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi::PhiSpec;
use crate::scalar::format_decimal;
use crate::series::PowerSeries;
use crate::sum::{build, evaluate_grid, PhiPadeApproximant};
use crate::{BigComplex, BigValue, Precision};

pub use grid::{Grid, Scale};
pub use manifest::{builtin_series, Builtin, Example, Manifest};

#[derive(Debug, Parser)]
#[command(
    name = "phipade",
    version,
    about = "Φ-Padé summation of divergent power series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an approximant, write it as JSON and tabulate it on a grid.
    Sum(SumArgs),
    /// Regenerate the comparison data for a builtin example.
    Reproduce(ReproduceArgs),
    /// Run the oracle cross-checks and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PrecisionArg {
    /// Working precision in decimal digits.
    #[arg(long, env = "PHIPADE_PRECISION", default_value_t = Precision::DEFAULT_DIGITS)]
    pub precision: u32,
}

impl PrecisionArg {
    fn get(&self) -> Result<Precision> {
        Precision::new(self.precision)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    /// Series as a JSON file, inline JSON, or '-' for stdin.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub series: Option<String>,
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
    #[arg(long, value_parser = parse_value, allow_hyphen_values = true)]
    pub a: Option<BigValue>,
    #[arg(long, value_parser = parse_value, allow_hyphen_values = true)]
    pub b: Option<BigValue>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub mu: Option<u32>,
    /// Padé order: the approximant is `[n-1, n]`.
    #[arg(long)]
    pub n: Option<usize>,
    /// `min:max:points[:log|linear]`.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<Grid>,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Format of the evaluation table.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub example: Builtin,
    #[command(flatten)]
    pub precision: PrecisionArg,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub precision: PrecisionArg,
    /// Perturbs the reference coefficient `<builtin>:<index>` of the matching check.
    #[arg(long, hide = true, value_parser = parse_corruption)]
    pub inject_corruption: Option<(Builtin, usize)>,
}

fn parse_value(s: &str) -> std::result::Result<BigValue, String> {
    BigValue::parse(s).map_err(|e| e.to_string())
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_corruption(s: &str) -> std::result::Result<(Builtin, usize), String> {
    let (name, index) = s.split_once(':').ok_or("expected <builtin>:<index>")?;
    let b = Builtin::from_str(name, false)?;
    Ok((
        b,
        index.parse().map_err(|_| format!("bad index '{index}'"))?,
    ))
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Sum(a) => cmd_sum(a),
        Command::Reproduce(a) => reproduce::cmd_reproduce(a),
        Command::Verify(a) => verify::cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e} [{}]", e.name());
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Parse(_) | Error::Json(_) => 2,
        _ => 1,
    }
}

fn read_series(source: &str) -> Result<PowerSeries> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(source)
            .map_err(|e| Error::InvalidInput(format!("cannot read {source}: {e}")))?
    };
    PowerSeries::from_json(&text)
}

/// Series, Φ parameters, order and grid resolved from flags and manifest defaults.
pub struct Job {
    pub series: PowerSeries,
    pub spec: PhiSpec,
    pub n: usize,
    pub grid: Grid,
}

fn resolve_job(args: &SumArgs) -> Result<Job> {
    let manifest = Manifest::load()?;
    let (series, defaults, n) = match (&args.series, args.builtin) {
        (Some(src), _) => (read_series(src)?, None, args.n.unwrap_or(1)),
        (None, Some(b)) => {
            let ex = manifest.example(b)?;
            let n = args.n.unwrap_or(*ex.orders.iter().max().unwrap_or(&1));
            (builtin_series(b, ex, 2 * n)?, Some(ex), n)
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "one of --series or --builtin is required".into(),
            ))
        }
    };
    let base = match defaults {
        Some(ex) => ex.phi_spec()?,
        None => PhiSpec::borel(),
    };
    let spec = PhiSpec::new(
        args.a.clone().unwrap_or(base.a),
        args.b.clone().unwrap_or(base.b),
        args.m.unwrap_or(base.m),
        args.mu.unwrap_or(base.mu),
    )?;
    let grid = match (&args.grid, defaults) {
        (Some(g), _) => g.clone(),
        (None, Some(ex)) => ex.grid()?,
        (None, None) => "0.1:10:25:log".parse()?,
    };
    Ok(Job {
        series,
        spec,
        n,
        grid,
    })
}

#[derive(Serialize)]
struct Row {
    g: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    value_im: Option<String>,
}

fn tabulate(approx: &PhiPadeApproximant, grid: &Grid, prec: Precision) -> Result<Vec<Row>> {
    let digits = prec.digits() as usize;
    let gs = grid.values(prec.bits());
    let points: Vec<BigComplex> = gs.iter().cloned().map(BigComplex::real).collect();
    let values = evaluate_grid(approx, &points, prec);
    gs.iter()
        .zip(values)
        .map(|(g, v)| {
            let v = v?;
            Ok(Row {
                g: g.to_decimal_string(digits),
                value: v.re.to_decimal_string(digits),
                value_im: (!v.im.is_zero()).then(|| v.im.to_decimal_string(digits)),
            })
        })
        .collect()
}

fn write_rows(rows: &[Row], format: Format, path: &Path) -> Result<()> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(rows)? + "\n",
        Format::Csv => {
            let complex = rows.iter().any(|r| r.value_im.is_some());
            let mut s = String::from(if complex {
                "g,value,value_im\n"
            } else {
                "g,value\n"
            });
            for r in rows {
                s.push_str(&r.g);
                s.push(',');
                s.push_str(&r.value);
                if complex {
                    s.push(',');
                    s.push_str(r.value_im.as_deref().unwrap_or("0"));
                }
                s.push('\n');
            }
            s
        }
    };
    fs::write(path, text)?;
    Ok(())
}

fn cmd_sum(args: &SumArgs) -> Result<i32> {
    let prec = args.precision.get()?;
    let job = resolve_job(args)?;
    let approx = build(&job.series, &job.spec, job.n, prec)?;
    for w in &approx.warnings {
        eprintln!("warning: {w}");
    }
    let rows = tabulate(&approx, &job.grid, prec)?;
    fs::create_dir_all(&args.out)?;
    let json_path = args.out.join("approximant.json");
    fs::write(&json_path, approx.to_json()? + "\n")?;
    let table_path = args.out.join(match args.format {
        Format::Json => "values.json",
        Format::Csv => "values.csv",
    });
    write_rows(&rows, args.format, &table_path)?;
    let digits = prec.digits() as usize;
    println!(
        "[{}/{}] approximant with a = {}, b = {}, m = {}, mu = {}",
        job.n - 1,
        job.n,
        job.spec.a,
        job.spec.b,
        job.spec.m,
        job.spec.mu
    );
    for (z, r) in approx.pf.poles.iter().zip(&approx.pf.residues) {
        println!(
            "  pole {}  residue {}",
            complex_string(z, digits),
            complex_string(r, digits)
        );
    }
    println!("wrote {}", json_path.display());
    println!("wrote {}", table_path.display());
    Ok(0)
}

/// Exact values as `p/q`, floats as decimals.
pub(crate) fn value_string(v: &BigValue, digits: usize) -> String {
    if v.is_exact() {
        v.to_string()
    } else {
        v.to_decimal_string(digits)
    }
}

pub(crate) fn complex_string(z: &BigComplex, digits: usize) -> String {
    if z.im.is_zero() {
        return value_string(&z.re, digits);
    }
    let im = value_string(&z.im, digits);
    let (sign, im) = match im.strip_prefix('-') {
        Some(rest) => ("-", rest.to_string()),
        None => ("+", im),
    };
    format!("{}{sign}{im}i", value_string(&z.re, digits))
}

pub(crate) fn float_string(x: f64, digits: usize) -> String {
    format_decimal(&rug::Float::with_val(53, x), digits.min(17))
}
