//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 domain error (including a pipeline
//! disagreement under `kolchin --check`), 2 usage error, 3 resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bounds;
use crate::diffrank::{compare_rank, parse_leader_profile, parse_monomial, LeaderProfile};
use crate::error::Error;
use crate::expsets::{parse_exponent_set, ExponentSet};
use crate::limits::Limits;
use crate::lindiff::{self, parse_system};
use crate::numpoly::NumericalPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

/// Caps and output format shared by all subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub enumeration_cap: u64,
    pub matrix_cell_cap: u64,
    pub bound_magnitude_cap: u64,
    pub prolongation_ceiling: u64,
    pub output_format: OutputFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        let limits = Limits::default();
        CliConfig {
            enumeration_cap: limits.enumeration_cap,
            matrix_cell_cap: limits.matrix_cell_cap,
            bound_magnitude_cap: limits.bound_digits,
            prolongation_ceiling: limits.prolongation_ceiling,
            output_format: OutputFormat::Human,
        }
    }
}

impl CliConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            enumeration_cap: self.enumeration_cap,
            matrix_cell_cap: self.matrix_cell_cap,
            bound_digits: self.bound_magnitude_cap,
            prolongation_ceiling: self.prolongation_ceiling,
            ..Limits::default()
        }
    }
}

fn positive(text: &str) -> Result<u64, String> {
    match text.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "kolchin",
    version,
    about = "Kolchin dimension polynomials and their effective bounds"
)]
struct Args {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "KOLCHIN_FORMAT",
        default_value = "human"
    )]
    format: OutputFormat,

    /// Largest number of candidates or subsets a volume computation may enumerate.
    #[arg(long, global = true, env = "KOLCHIN_ENUM_CAP", default_value_t = 10_000_000, value_parser = positive)]
    enum_cap: u64,

    /// Largest prolongation matrix, in cells.
    #[arg(long, global = true, env = "KOLCHIN_MATRIX_CAP", default_value_t = 100_000_000, value_parser = positive)]
    matrix_cap: u64,

    /// Largest bound value, in decimal digits.
    #[arg(long, global = true, env = "KOLCHIN_BOUND_DIGITS", default_value_t = 100_000, value_parser = positive)]
    bound_digits: u64,

    /// Highest level searched for a stable sampling window.
    #[arg(long, global = true, env = "KOLCHIN_PROLONGATION_CEILING", default_value_t = 200, value_parser = positive)]
    prolongation_ceiling: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension polynomial of an exponent set.
    OmegaSet {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        file: PathBuf,
    },
    /// Number of exponent vectors of order at most s outside the upward closure.
    Volume {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        s: u64,
    },
    /// Order bound C, regularity level s0, domination level s1 and coefficient bound.
    Bounds {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        d: u64,
    },
    /// Compares two differential monomials under the orderly ranking.
    RankCompare {
        #[arg(long)]
        m: Option<usize>,
        a: String,
        b: String,
    },
    /// Kolchin polynomial of a leader profile.
    OmegaLeaders {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Kolchin polynomial of a linear system.
    Kolchin {
        #[arg(long)]
        system: PathBuf,
        /// Run both pipelines and compare.
        #[arg(long)]
        check: bool,
        /// Decide whether the Kolchin polynomial eventually dominates P.
        #[arg(long, value_name = "P", allow_hyphen_values = true)]
        at_least: Option<String>,
        /// Decide whether the Kolchin polynomial equals P.
        #[arg(long, value_name = "P", allow_hyphen_values = true)]
        equals: Option<String>,
        /// Print the differential type.
        #[arg(long = "type")]
        show_type: bool,
    },
    /// Numerical polynomial through values at start, start + 1, ...
    Interpolate {
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long)]
        m: usize,
        #[arg(required = true, allow_negative_numbers = true)]
        values: Vec<String>,
    },
}

/// A failed command: exit status plus message.
struct Failure {
    status: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (status, kind) = match &e {
            Error::ResourceLimit(_) => (EXIT_RESOURCE, "resource_limit"),
            Error::Parse { .. } => (EXIT_DOMAIN, "parse"),
            _ => (EXIT_DOMAIN, "domain"),
        };
        Failure {
            status,
            kind,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        status: EXIT_USAGE,
        kind: "usage",
        message,
    }
}

/// Result of a command: human lines, a JSON document and an exit status.
struct Output {
    human: Vec<String>,
    json: Value,
    status: i32,
}

impl Output {
    fn ok(human: Vec<String>, json: Value) -> Self {
        Output {
            human,
            json,
            status: EXIT_OK,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn poly_json(p: &NumericalPolynomial) -> Value {
    let mut v = serde_json::to_value(p).expect("polynomial serializes");
    v["rendered"] = json!(p.to_string());
    v
}

fn coeff_list(p: &NumericalPolynomial) -> String {
    let parts: Vec<String> = p.standard_coeffs().iter().map(BigInt::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn poly_lines(label: &str, p: &NumericalPolynomial) -> Vec<String> {
    vec![
        format!("{label}{p}"),
        format!("standard coefficients: {}", coeff_list(p)),
    ]
}

fn set_json(set: &ExponentSet) -> Value {
    json!(set
        .minimal_elements()
        .generators()
        .iter()
        .map(|g| g.entries().to_vec())
        .collect::<Vec<_>>())
}

fn profile_json(profile: &LeaderProfile) -> Value {
    json!(profile.sets().iter().map(set_json).collect::<Vec<_>>())
}

fn omega_set(m: Option<usize>, file: &Path) -> Result<Output, Failure> {
    let set = parse_exponent_set(&read(file)?, m)?;
    let omega = set.dimension_polynomial();
    let mut human = poly_lines("", &omega);
    human.push(format!("stability bound: {}", set.stability_bound()));
    let mut doc = poly_json(&omega);
    doc["minimal_generators"] = set_json(&set);
    doc["stability_bound"] = json!(set.stability_bound());
    Ok(Output::ok(human, doc))
}

fn volume(m: Option<usize>, file: &Path, s: u64, limits: &Limits) -> Result<Output, Failure> {
    let set = parse_exponent_set(&read(file)?, m)?;
    let direct = set.volume_with(s, limits)?;
    let ie = set.volume_ie_with(s, limits)?;
    let agree = direct == ie;
    let human = vec![
        format!("V_E({s}) = {direct} (enumeration)"),
        format!("V_E({s}) = {ie} (inclusion-exclusion)"),
    ];
    let doc = json!({
        "s": s,
        "volume": direct.to_string(),
        "volume_ie": ie.to_string(),
        "agree": agree,
    });
    let status = if agree { EXIT_OK } else { EXIT_DOMAIN };
    Ok(Output {
        human,
        json: doc,
        status,
    })
}

fn bounds_cmd(r: u64, m: u64, n: u64, d: u64, limits: &Limits) -> Result<Output, Failure> {
    bounds::BoundInputs::new(r, m, n)?;
    let mut report = bounds::s1_with(r, m, n, limits)?;
    report.inputs = report.inputs.with_degree(d);
    let human = vec![
        format!("C = {}", report.c),
        format!("D = {}", report.d),
        format!("s0 = {}", report.s0),
        format!("s1 = {}", report.s1),
        format!("coeff_bound = {}", report.coeff_bound),
    ];
    Ok(Output::ok(human, report.to_json()))
}

fn rank_compare(m: Option<usize>, a: &str, b: &str) -> Result<Output, Failure> {
    let a = parse_monomial(a, m)?;
    let b = parse_monomial(b, m)?;
    let ord = compare_rank(&a, &b)?;
    let (symbol, word) = match ord {
        std::cmp::Ordering::Less => ("<", "less"),
        std::cmp::Ordering::Equal => ("=", "equal"),
        std::cmp::Ordering::Greater => (">", "greater"),
    };
    let doc = json!({
        "a": a.to_string(),
        "b": b.to_string(),
        "ordering": word,
        "key_a": a.rank_key().as_slice(),
        "key_b": b.rank_key().as_slice(),
    });
    Ok(Output::ok(vec![format!("{a} {symbol} {b}")], doc))
}

fn omega_leaders(file: &Path, m: Option<usize>, n: Option<usize>) -> Result<Output, Failure> {
    let profile = parse_leader_profile(&read(file)?, m, n)?;
    let omega = profile.kolchin_polynomial();
    let mut human = poly_lines("", &omega);
    human.push(format!("stability bound: {}", profile.stability_bound()));
    let mut doc = poly_json(&omega);
    doc["leader_sets"] = profile_json(&profile);
    doc["stability_bound"] = json!(profile.stability_bound());
    Ok(Output::ok(human, doc))
}

struct KolchinRequest<'a> {
    system: &'a Path,
    check: bool,
    at_least: Option<&'a str>,
    equals: Option<&'a str>,
    show_type: bool,
}

fn kolchin_cmd(req: KolchinRequest<'_>, limits: &Limits) -> Result<Output, Failure> {
    let sys = parse_system(&read(req.system)?)?;
    let gb = lindiff::module_groebner(&sys);
    let profile = gb.leader_profile();
    let omega = profile.kolchin_polynomial();
    let mut human = poly_lines("omega = ", &omega);
    let mut doc = poly_json(&omega);
    doc["leader_sets"] = profile_json(&profile);
    doc["groebner_basis"] = json!(gb
        .elements()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>());
    let mut status = EXIT_OK;

    if req.show_type {
        let t = omega.differential_type();
        human.push(format!("differential type: {t}"));
        doc["differential_type"] = json!(t);
    }
    if let Some(text) = req.at_least {
        let p = NumericalPolynomial::parse(text)?;
        let answer = lindiff::omega_at_least(&sys, &p);
        human.push(format!("omega >= {p}: {answer}"));
        doc["at_least"] = json!({ "p": poly_json(&p), "result": answer });
    }
    if let Some(text) = req.equals {
        let p = NumericalPolynomial::parse(text)?;
        let answer = lindiff::omega_equals(&sys, &p);
        human.push(format!("omega == {p}: {answer}"));
        doc["equals"] = json!({ "p": poly_json(&p), "result": answer });
    }
    if req.check {
        let report = lindiff::kolchin_via_prolongation_with(&sys, limits)?;
        let agree = report.polynomial == omega;
        human.push(format!("via leaders:      {omega}  {}", coeff_list(&omega)));
        human.push(format!(
            "via prolongation: {}  {}  (margin {}, levels {}..={})",
            report.polynomial,
            coeff_list(&report.polynomial),
            report.margin,
            report.start,
            report.start + sys.m() as u64
        ));
        human.push(if agree { "AGREE" } else { "DISAGREE" }.to_string());
        doc["check"] = json!({
            "via_leaders": poly_json(&omega),
            "via_prolongation": poly_json(&report.polynomial),
            "margin": report.margin,
            "start": report.start,
            "values": report.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "agree": agree,
        });
        if !agree {
            status = EXIT_DOMAIN;
        }
    }
    Ok(Output {
        human,
        json: doc,
        status,
    })
}

fn interpolate_cmd(start: u64, m: usize, values: &[String]) -> Result<Output, Failure> {
    let values = values
        .iter()
        .map(|v| {
            v.trim()
                .parse::<BigInt>()
                .map_err(|_| usage(format!("value {v:?} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = NumericalPolynomial::interpolate(&values, start, m)?;
    Ok(Output::ok(poly_lines("", &p), poly_json(&p)))
}

fn dispatch(args: &Args, config: &CliConfig) -> Result<Output, Failure> {
    let limits = config.limits();
    match &args.command {
        Command::OmegaSet { m, file } => omega_set(*m, file),
        Command::Volume { m, file, s } => volume(*m, file, *s, &limits),
        Command::Bounds { r, m, n, d } => bounds_cmd(*r, *m, *n, *d, &limits),
        Command::RankCompare { m, a, b } => rank_compare(*m, a, b),
        Command::OmegaLeaders { file, m, n } => omega_leaders(file, *m, *n),
        Command::Kolchin {
            system,
            check,
            at_least,
            equals,
            show_type,
        } => kolchin_cmd(
            KolchinRequest {
                system,
                check: *check,
                at_least: at_least.as_deref(),
                equals: equals.as_deref(),
                show_type: *show_type,
            },
            &limits,
        ),
        Command::Interpolate { start, m, values } => interpolate_cmd(*start, *m, values),
    }
}

/// Runs one command and returns its exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return status;
        }
    };
    let config = CliConfig {
        enumeration_cap: args.enum_cap,
        matrix_cell_cap: args.matrix_cap,
        bound_magnitude_cap: args.bound_digits,
        prolongation_ceiling: args.prolongation_ceiling,
        output_format: args.format,
    };
    let json_mode = config.output_format == OutputFormat::Json;
    match dispatch(&args, &config) {
        Ok(output) => {
            if json_mode {
                let _ = writeln!(out, "{}", output.json);
            } else {
                for line in &output.human {
                    let _ = writeln!(out, "{line}");
                }
            }
            output.status
        }
        Err(f) => {
            if json_mode {
                let doc = json!({ "error": { "kind": f.kind, "message": f.message }, "status": f.status });
                let _ = writeln!(out, "{doc}");
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("kolchin").chain(args.iter().copied());
        let status = run(argv, &mut out, &mut err);
        (status, String::from_utf8(out).unwrap())
    }

    #[test]
    fn config_defaults_match_limits() {
        let c = CliConfig::default();
        assert_eq!(c.limits(), Limits::default());
        assert_eq!(c.output_format, OutputFormat::Human);
    }

    #[test]
    fn bounds_remark_case() {
        let (status, out) = run_args(&["bounds", "--r", "4", "--m", "1", "--n", "3"]);
        assert_eq!(status, 0);
        assert!(out.lines().any(|l| l == "s0 = 3"), "{out}");
    }

    #[test]
    fn zero_cap_is_usage_error() {
        let (status, _) = run_args(&[
            "--enum-cap",
            "0",
            "bounds",
            "--r",
            "1",
            "--m",
            "1",
            "--n",
            "1",
        ]);
        assert_eq!(status, EXIT_USAGE);
    }

    #[test]
    fn interpolate_negative_values() {
        let (status, out) = run_args(&[
            "--format",
            "json",
            "interpolate",
            "--m",
            "1",
            "--",
            "-1",
            "1",
        ]);
        assert_eq!(status, 0, "{out}");
        let p = NumericalPolynomial::from_json(out.trim()).unwrap();
        assert_eq!(p.evaluate_u64(2), BigInt::from(3));
    }
}
