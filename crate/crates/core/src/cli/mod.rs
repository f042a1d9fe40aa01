//! `hilbpoly` command-line front end.
//!
//! Exit codes: 0 affirmative, 1 definite negative, 2 usage or input error.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::intpoly::Polynomial;
use crate::macaulay::{is_hilbert, macaulay_params, MacaulayParams};
use crate::oracle::{cross_check, MonomialIdeal};
use crate::realizer::{
    build_certificate, leading_bound, minimal_leading, realize_signs, verify_certificate,
    LowerCoefficients,
};

pub use parse::{parse_coeffs, parse_generators, parse_pattern, parse_poly, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "hilbpoly",
    version,
    about = "Hilbert polynomials via Macaulay parameters, with exact arithmetic"
)]
struct Cli {
    /// Emit a single JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a polynomial is a Hilbert polynomial.
    Check {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Print the Macaulay parameters and the terms they expand to.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Print the sign pattern (sgn a_0, ..., sgn a_{d-1}).
    Signs {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Build a Hilbert polynomial with the given sign pattern, a_0 first (e.g. "-1,0,1").
    Realize {
        #[arg(allow_hyphen_values = true)]
        pattern: String,
    },
    /// Leading-coefficient bound and the empirical minimum for given lower coefficients.
    Bound {
        /// Lower coefficients a_0,a_1,...,a_{d-1}.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Hilbert function of a monomial quotient, its polynomial and Macaulay verdict.
    Oracle {
        #[arg(long)]
        vars: usize,
        /// Generators over x1..xn, e.g. "x1^2,x1*x2".
        #[arg(long, default_value = "")]
        gens: String,
        #[arg(long, default_value_t = 25)]
        tmax: u32,
    },
}

struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    params: Value,
    verdict: Value,
    text: String,
    exit: i32,
}

fn poly_json(p: &Polynomial) -> Value {
    json!({
        "text": p.to_string(),
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn params_json(m: &MacaulayParams) -> Value {
    Value::from(m.params().iter().map(BigInt::to_string).collect::<Vec<_>>())
}

/// Parses `args` (program name first), runs the command, writes to `out`/`err`
/// and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => {
            let written = if cli.json {
                let obj = json!({
                    "command": report.command,
                    "input": report.input,
                    "result": report.result,
                    "params": report.params,
                    "verdict": report.verdict,
                });
                writeln!(out, "{obj}")
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 2;
            }
            report.exit
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command) -> Result<Report, String> {
    match command {
        Command::Check { poly } => {
            let f = parse_poly(&poly).map_err(|e| e.to_string())?;
            let params = macaulay_params(&f).ok();
            let hilbert = params.as_ref().is_some_and(MacaulayParams::is_admissible);
            let head = if hilbert {
                "Hilbert polynomial"
            } else {
                "not a Hilbert polynomial"
            };
            let text = match &params {
                Some(m) => format!("{head}; M = {m}\n"),
                None => format!("{head}; not integer-valued\n"),
            };
            Ok(Report {
                command: "check",
                input: json!(poly),
                result: poly_json(&f),
                params: params.as_ref().map_or(Value::Null, params_json),
                verdict: json!(hilbert),
                text,
                exit: if hilbert { 0 } else { 1 },
            })
        }
        Command::Decompose { poly } => {
            let f = parse_poly(&poly).map_err(|e| e.to_string())?;
            let m = macaulay_params(&f).map_err(|e| e.to_string())?;
            let terms = m.terms();
            let mut text = format!("M = {m}\n");
            for (i, (mi, t)) in m.params().iter().zip(&terms).enumerate() {
                text.push_str(&format!("m_{i} = {mi}: {t}\n"));
            }
            let hilbert = m.is_admissible();
            text.push_str(if hilbert {
                "Hilbert polynomial\n"
            } else {
                "not a Hilbert polynomial\n"
            });
            Ok(Report {
                command: "decompose",
                input: json!(poly),
                result: json!({
                    "polynomial": poly_json(&f),
                    "terms": terms.iter().map(poly_json).collect::<Vec<_>>(),
                }),
                params: params_json(&m),
                verdict: json!(hilbert),
                text,
                exit: 0,
            })
        }
        Command::Signs { poly } => {
            let f = parse_poly(&poly).map_err(|e| e.to_string())?;
            let s = f.sign_pattern().map_err(|e| e.to_string())?;
            Ok(Report {
                command: "signs",
                input: json!(poly),
                result: json!(s.entries().iter().map(|e| e.value()).collect::<Vec<_>>()),
                params: Value::Null,
                verdict: Value::Null,
                text: format!("{s}\n"),
                exit: 0,
            })
        }
        Command::Realize { pattern } => {
            let s = parse_pattern(&pattern).map_err(|e| e.to_string())?;
            let f = realize_signs(&s).map_err(|e| e.to_string())?;
            let lower = LowerCoefficients::new(
                f.coeffs()[..s.len()]
                    .iter()
                    .map(|c| c.to_integer())
                    .collect(),
            )
            .map_err(|e| e.to_string())?;
            let n = f.leading_coefficient().expect("degree >= 1").to_integer();
            let cert = build_certificate(&lower, &n).map_err(|e| e.to_string())?;
            let verified = verify_certificate(&cert, &f) && is_hilbert(&f);
            let m = macaulay_params(&f).map_err(|e| e.to_string())?;
            let text = format!(
                "{f}\nM = {m}\ncertificate ({}):\n{cert}",
                if verified { "verified" } else { "FAILED" }
            );
            Ok(Report {
                command: "realize",
                input: json!(pattern),
                result: json!({
                    "polynomial": poly_json(&f),
                    "certificate": cert.summands().iter().map(poly_json).collect::<Vec<_>>(),
                }),
                params: params_json(&m),
                verdict: json!(verified),
                text,
                exit: if verified { 0 } else { 1 },
            })
        }
        Command::Bound { coeffs } => {
            let a = parse_coeffs(&coeffs).map_err(|e| e.to_string())?;
            let lower = LowerCoefficients::new(a).map_err(|e| e.to_string())?;
            let bound = leading_bound(&lower);
            let minimal = minimal_leading(&lower);
            Ok(Report {
                command: "bound",
                input: json!(coeffs),
                result: json!({
                    "leading_bound": bound.to_string(),
                    "minimal_leading": minimal.to_string(),
                }),
                params: Value::Null,
                verdict: Value::Null,
                text: format!("leading_bound = {bound}\nminimal_leading = {minimal}\n"),
                exit: 0,
            })
        }
        Command::Oracle { vars, gens, tmax } => {
            let generators = parse_generators(&gens, vars).map_err(|e| e.to_string())?;
            let ideal = MonomialIdeal::new(vars, generators).map_err(|e| e.to_string())?;
            let check = cross_check(&ideal, tmax).map_err(|e| e.to_string())?;
            let passed = check.passed();
            let params_text = check
                .params
                .as_ref()
                .map_or_else(|| "not integer-valued".to_string(), ToString::to_string);
            let text = format!(
                "ideal: {ideal}\nH = {}\nP(x) = {} (agrees from t = {})\nM = {params_text}\nverdict: {}\n",
                check.table,
                check.polynomial,
                check.stabilization,
                if passed { "pass" } else { "FAIL" }
            );
            Ok(Report {
                command: "oracle",
                input: json!({ "vars": vars, "gens": gens, "tmax": tmax }),
                result: json!({
                    "table": check.table.values(),
                    "polynomial": poly_json(&check.polynomial),
                    "stabilization": check.stabilization,
                }),
                params: check.params.as_ref().map_or(Value::Null, params_json),
                verdict: json!(passed),
                text,
                exit: if passed { 0 } else { 1 },
            })
        }
    }
}
