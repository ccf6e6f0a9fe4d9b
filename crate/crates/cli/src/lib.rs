//! Command-line front end for `trignn`.
//!
//! Every command produces a [`CommandResult`], printed as JSON by default.
//! Exit codes: 0 nonnegative (or success), 1 negative, 2 inconclusive,
//! 64 malformed input, 74 output file not writable.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use trignn::bounds::{branch_and_bound_full, TrigSum};
use trignn::criteria::criteria_report;
use trignn::families::FamilyId;
use trignn::region::{
    boundary_csv, boundary_svg, boundary_sweep, cosine2_characterize, degree3_characterize, kappa0_with,
    Kappa0Strategy,
};
use trignn::scalar::{format_rational, parse_coeffs, parse_rational};
use trignn::sturm::{certify_cosine, certify_sine};
use trignn::{CosinePoly, Rational, SinePoly, Status, Verdict};

pub const EXIT_NONNEGATIVE: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<trignn::Error> for CliError {
    fn from(e: trignn::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "trignn", version, about = "Certified nonnegativity of sine and cosine polynomials on [0, pi]")]
pub struct Cli {
    /// Print the result as JSON; `--json false` prints a short text summary.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set, num_args = 0..=1, default_missing_value = "true")]
    pub json: bool,
    /// Tolerance for enclosures, as an exact rational such as 1/1000000.
    #[arg(long, global = true, default_value = "1/1000000")]
    pub tol: String,
    /// Subdivision depth limit for the interval method.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_depth: u32,
    /// Seed recorded in the input echo for reproducible test runs.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sine,
    Cosine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sturm,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharKind {
    Sine3,
    Cosine2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide nonnegativity of a sine or cosine polynomial on [0, pi].
    Certify {
        kind: Kind,
        /// Comma-separated rationals, a_1,...,a_n for sines and a_0,...,a_n for cosines.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, value_enum, default_value_t = Method::Sturm)]
        method: Method,
    },
    /// Coefficient criteria and endpoint necessary conditions for a sine polynomial.
    Criteria {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Least kappa with [kappa, 1, ..., 1, lambda]_s nonnegative.
    Kappa0 {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Ignore closed forms and bisect on membership.
        #[arg(long)]
        bisect: bool,
    },
    /// Sweep kappa0 over a lambda range and write CSV or SVG.
    Boundary {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        lambda_lo: String,
        #[arg(allow_hyphen_values = true)]
        lambda_hi: String,
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form test for [a,b,c]_s (sine3) or a + b cos x + c cos 2x (cosine2).
    Characterize {
        kind: CharKind,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Build a named family member, e.g. phi:9, sigma:6, theta-:2, kappa-lambda:4:1:1/2.
    Family { id: String },
}

/// Global options shared by all commands.
#[derive(Debug, Clone)]
pub struct Options {
    pub tol: Rational,
    pub max_depth: u32,
    pub seed: Option<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options { tol: trignn::scalar::rat(1, 1_000_000), max_depth: 16, seed: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub input: Value,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_variable: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_angle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sums: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa0_lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa0_hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub timings_ms: f64,
}

impl CommandResult {
    fn new(command: &str, input: Value, status: &str) -> Self {
        CommandResult {
            command: command.to_string(),
            input,
            status: status.to_string(),
            witness_x: None,
            witness_value: None,
            witness_variable: None,
            witness_angle: None,
            certificate: None,
            sums: None,
            kappa0_lo: None,
            kappa0_hi: None,
            method: None,
            details: None,
            timings_ms: 0.0,
        }
    }

    fn with_verdict(mut self, v: &Verdict) -> Self {
        self.status = v.status.as_str().to_string();
        if let Some(w) = &v.witness {
            self.witness_x = Some(format_rational(&w.point));
            self.witness_value = Some(format_rational(&w.value));
            self.witness_variable = Some(to_value(&w.variable).as_str().unwrap_or_default().to_string());
            self.witness_angle = w.angle;
        }
        self.certificate = v.certificate.as_ref().map(to_value);
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.status.as_str() {
            "negative" => EXIT_NEGATIVE,
            "inconclusive" => EXIT_INCONCLUSIVE,
            _ => EXIT_NONNEGATIVE,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}", self.command, self.status);
        if let (Some(lo), Some(hi)) = (&self.kappa0_lo, &self.kappa0_hi) {
            s.push_str(&format!(" kappa0 in [{lo}, {hi}]"));
        }
        if let Some(m) = &self.method {
            s.push_str(&format!(" ({m})"));
        }
        if let (Some(x), Some(v)) = (&self.witness_x, &self.witness_value) {
            s.push_str(&format!(" witness {x} value {v}"));
            if let Some(a) = self.witness_angle {
                s.push_str(&format!(" (x = {a:.6})"));
            }
        }
        s
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn rat_str(r: &Rational) -> String {
    format_rational(r)
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

fn status_of(nonneg: bool) -> &'static str {
    if nonneg {
        Status::Nonnegative.as_str()
    } else {
        Status::Negative.as_str()
    }
}

pub fn cmd_certify(kind: Kind, coeffs: &str, method: Method, opts: &Options) -> CliResult<CommandResult> {
    let c = parse_coeffs(coeffs)?;
    let input = json!({
        "kind": if kind == Kind::Sine { "sine" } else { "cosine" },
        "coeffs": rats(&c),
        "method": if method == Method::Sturm { "sturm" } else { "interval" },
        "max_depth": opts.max_depth,
    });
    let verdict = match (kind, method) {
        (Kind::Sine, Method::Sturm) => certify_sine(&SinePoly::new(c)?),
        (Kind::Cosine, Method::Sturm) => certify_cosine(&CosinePoly::new(c)),
        (Kind::Sine, Method::Interval) => branch_and_bound_full(TrigSum::Sine(&SinePoly::new(c)?), opts.max_depth),
        (Kind::Cosine, Method::Interval) => {
            branch_and_bound_full(TrigSum::Cosine(&CosinePoly::new(c)), opts.max_depth)
        }
    };
    let mut r = CommandResult::new("certify", input, "").with_verdict(&verdict);
    r.method = Some(if method == Method::Sturm { "sturm" } else { "interval" }.to_string());
    Ok(r)
}

pub fn cmd_criteria(coeffs: &str) -> CliResult<CommandResult> {
    let c = parse_coeffs(coeffs)?;
    let p = SinePoly::new(c.clone())?;
    let report = criteria_report(&p);
    let status = if !(report.nec_at_0.pass && report.nec_at_pi.pass) {
        Status::Negative
    } else if report.belov_ok || report.fejer_ok {
        Status::Nonnegative
    } else {
        Status::Inconclusive
    };
    let mut r = CommandResult::new("criteria", json!({ "coeffs": rats(&c) }), status.as_str());
    r.sums = Some(json!({
        "belov_partial_sums": rats(&report.belov_partial_sums),
        "nec_at_0": to_value(&report.nec_at_0),
        "nec_at_pi": to_value(&report.nec_at_pi),
    }));
    r.details = Some(to_value(&report));
    Ok(r)
}

pub fn cmd_kappa0(n: usize, lambda: &str, bisect: bool, opts: &Options) -> CliResult<CommandResult> {
    let lambda = parse_rational(lambda)?;
    let strategy = if bisect { Kappa0Strategy::ForceBisection } else { Kappa0Strategy::Auto };
    let b = kappa0_with(n, &lambda, &opts.tol, strategy)?;
    let input = json!({ "n": n, "lambda": rat_str(&lambda), "tol": rat_str(&opts.tol), "bisect": bisect });
    let mut r = CommandResult::new("kappa0", input, "ok");
    r.kappa0_lo = Some(rat_str(&b.kappa0.lo));
    r.kappa0_hi = Some(rat_str(&b.kappa0.hi));
    r.method = Some(b.method.as_str().to_string());
    Ok(r)
}

pub fn cmd_boundary(
    n: usize,
    lambda_lo: &str,
    lambda_hi: &str,
    steps: usize,
    format: Format,
    out: &Path,
    opts: &Options,
) -> CliResult<CommandResult> {
    let lo = parse_rational(lambda_lo)?;
    let hi = parse_rational(lambda_hi)?;
    let points = boundary_sweep(n, &lo, &hi, steps, &opts.tol)?;
    let body = match format {
        Format::Csv => boundary_csv(&points, &opts.tol),
        Format::Svg => boundary_svg(&points),
    };
    std::fs::write(out, body).map_err(|e| CliError::Io(format!("cannot write {}: {e}", out.display())))?;
    let input = json!({
        "n": n,
        "lambda_lo": rat_str(&lo),
        "lambda_hi": rat_str(&hi),
        "steps": steps,
        "tol": rat_str(&opts.tol),
        "format": if format == Format::Csv { "csv" } else { "svg" },
        "out": out.display().to_string(),
    });
    let lowest = points.iter().min_by(|a, b| a.kappa0.lo.cmp(&b.kappa0.lo)).expect("steps >= 2");
    let mut r = CommandResult::new("boundary", input, "ok");
    r.kappa0_lo = Some(rat_str(&lowest.kappa0.lo));
    r.kappa0_hi = Some(rat_str(&lowest.kappa0.hi));
    r.details = Some(json!({ "rows": points.len(), "lowest_at_lambda": rat_str(&lowest.lambda) }));
    Ok(r)
}

pub fn cmd_characterize(kind: CharKind, a: &str, b: &str, c: &str) -> CliResult<CommandResult> {
    let (a, b, c) = (parse_rational(a)?, parse_rational(b)?, parse_rational(c)?);
    let ch = match kind {
        CharKind::Sine3 => degree3_characterize(&a, &b, &c),
        CharKind::Cosine2 => cosine2_characterize(&a, &b, &c),
    };
    let input = json!({
        "kind": if kind == CharKind::Sine3 { "sine3" } else { "cosine2" },
        "a": rat_str(&a),
        "b": rat_str(&b),
        "c": rat_str(&c),
    });
    let mut r = CommandResult::new("characterize", input, status_of(ch.holds));
    r.details = Some(to_value(&ch));
    Ok(r)
}

pub fn cmd_family(id: &str) -> CliResult<CommandResult> {
    let fid: FamilyId = id.parse()?;
    let p = fid.build()?;
    let verdict = certify_sine(&p);
    let report = criteria_report(&p);
    let input = json!({ "id": fid.to_string() });
    let mut r = CommandResult::new("family", input, "").with_verdict(&verdict);
    r.method = Some("sturm".to_string());
    r.sums = Some(json!({
        "belov_partial_sums": rats(&report.belov_partial_sums),
        "nec_at_0": to_value(&report.nec_at_0),
        "nec_at_pi": to_value(&report.nec_at_pi),
    }));
    r.details = Some(json!({ "coefficients": rats(p.coeffs()), "criteria": to_value(&report) }));
    Ok(r)
}

pub fn execute(cli: &Cli) -> CliResult<CommandResult> {
    let opts = Options { tol: parse_rational(&cli.tol)?, max_depth: cli.max_depth, seed: cli.seed };
    if opts.tol <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    let start = Instant::now();
    let mut r = match &cli.command {
        Command::Certify { kind, coeffs, method } => cmd_certify(*kind, coeffs, *method, &opts),
        Command::Criteria { coeffs } => cmd_criteria(coeffs),
        Command::Kappa0 { n, lambda, bisect } => cmd_kappa0(*n, lambda, *bisect, &opts),
        Command::Boundary { n, lambda_lo, lambda_hi, steps, format, out } => {
            cmd_boundary(*n, lambda_lo, lambda_hi, *steps, *format, out, &opts)
        }
        Command::Characterize { kind, a, b, c } => cmd_characterize(*kind, a, b, c),
        Command::Family { id } => cmd_family(id),
    }?;
    if let (Some(seed), Value::Object(map)) = (opts.seed, &mut r.input) {
        map.insert("seed".into(), json!(seed));
    }
    r.timings_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(r)
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let text = if cli.json { r.to_json() } else { r.to_text() };
            let _ = writeln!(out, "{text}");
            r.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
