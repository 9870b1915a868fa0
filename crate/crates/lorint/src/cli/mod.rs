//! Command-line surface: `eval`, `table`, `verify`, `deriv`.
//!
//! Exit codes: 0 on success (for `verify`: nothing worse than sign
//! disagreements), 1 when `verify` finds a substantive value mismatch,
//! 2 on usage errors.

pub mod report;

pub use report::{EntryStatus, QuadratureColumn, ReportEntry, StatusCounts, VerificationReport};

use std::collections::BTreeMap;
use std::io::Write;

use serde_json::{json, Value};

use crate::closedform::{even_case_corrected, even_case_paper, odd_case};
use crate::derivkernel::derivative_rep;
use crate::exactnum::PiRational;
use crate::oracle::{integral_exact, quadrature, MIN_REL_TOL};

const USAGE: &str = "\
Usage: lorint <command> [arguments]

Commands:
  eval M N [--method oracle|paper|corrected|quadrature] [--format text|json]
        Evaluate I(M,N). Default method: oracle (exact moment table).
  table --max S [--format csv|json|markdown]
        All pairs m >= n with m+n <= S, exact value plus 15-digit decimal.
  verify --max S [--tol T] [--format json|markdown]
        Cross-check the closed forms against the exact oracle and quadrature.
  deriv N [--format text|json]
        Numerator polynomial P_N of the N-th derivative of 1/(1+x^2).

Exit codes: 0 success; 1 verify found a value mismatch; 2 usage error.";

/// Default tolerance for quadrature columns and `--method quadrature`.
const DEFAULT_REL_TOL: f64 = 1e-10;

/// Runs the CLI against explicit argument and output streams; returns the
/// process exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut args = args.iter().map(AsRef::as_ref);
    let command = match args.next() {
        Some(c) => c,
        None => {
            let _ = writeln!(err, "{USAGE}");
            return 2;
        }
    };
    let rest: Vec<&str> = args.collect();
    let outcome = match command {
        "eval" => cmd_eval(&rest, out),
        "table" => cmd_table(&rest, out),
        "verify" => cmd_verify(&rest, out),
        "deriv" => cmd_deriv(&rest, out),
        "help" | "--help" | "-h" => {
            let _ = writeln!(out, "{USAGE}");
            return 0;
        }
        other => Err(format!("unknown command {other:?}")),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            let _ = writeln!(err, "{USAGE}");
            2
        }
    }
}

/// Splits raw arguments into positionals and `--key value` / `--key=value`
/// flags, admitting only the listed keys.
fn split_args<'a>(
    args: &[&'a str],
    allowed: &[&str],
) -> Result<(Vec<&'a str>, BTreeMap<String, &'a str>), String> {
    let mut positionals = Vec::new();
    let mut flags = BTreeMap::new();
    let mut iter = args.iter().copied();
    while let Some(token) = iter.next() {
        if let Some(name) = token.strip_prefix("--") {
            let (key, value) = match name.split_once('=') {
                Some((k, v)) => (k.to_string(), v),
                None => {
                    let value = iter
                        .next()
                        .ok_or_else(|| format!("flag --{name} needs a value"))?;
                    (name.to_string(), value)
                }
            };
            if !allowed.contains(&key.as_str()) {
                return Err(format!("unknown flag --{key}"));
            }
            if flags.insert(key.clone(), value).is_some() {
                return Err(format!("duplicate flag --{key}"));
            }
        } else {
            positionals.push(token);
        }
    }
    Ok((positionals, flags))
}

fn parse_index(text: &str, what: &str) -> Result<u32, String> {
    text.parse::<u32>()
        .map_err(|_| format!("{what} must be a non-negative integer, got {text:?}"))
}

/// 15 significant digits, scientific.
fn decimal15(x: f64) -> String {
    format!("{x:.14e}")
}

/// None once the value outgrows the double range (factorials get there
/// around m+n = 193); the exact column is unaffected.
fn exact_to_f64(v: &PiRational) -> Option<f64> {
    v.to_f64().ok()
}

fn cmd_eval(args: &[&str], out: &mut dyn Write) -> Result<i32, String> {
    let (positionals, flags) = split_args(args, &["method", "format"])?;
    let [m, n] = positionals.as_slice() else {
        return Err(format!(
            "eval takes exactly two indices, got {}",
            positionals.len()
        ));
    };
    let m = parse_index(m, "M")?;
    let n = parse_index(n, "N")?;
    let method = flags.get("method").copied().unwrap_or("oracle");
    let format = flags.get("format").copied().unwrap_or("text");
    if !matches!(format, "text" | "json") {
        return Err(format!("unknown format {format:?} (expected text or json)"));
    }

    if method == "quadrature" {
        let result = quadrature(m, n, DEFAULT_REL_TOL).map_err(|e| e.to_string())?;
        match format {
            "text" => {
                let _ = writeln!(out, "{}", result.value);
            }
            _ => {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "value": result.value,
                        "abs_error_estimate": result.abs_error_estimate,
                        "evaluations": result.evaluations,
                        "converged": result.converged,
                    })
                );
            }
        }
        return Ok(0);
    }

    let value = match method {
        "oracle" => integral_exact(m, n),
        "paper" => {
            if (m + n) % 2 == 0 {
                even_case_paper(m, n).map_err(|e| e.to_string())?
            } else {
                odd_case(m, n).map_err(|e| e.to_string())?
            }
        }
        "corrected" => {
            if (m + n) % 2 == 0 {
                even_case_corrected(m, n).map_err(|e| e.to_string())?
            } else {
                odd_case(m, n).map_err(|e| e.to_string())?
            }
        }
        other => return Err(format!("unknown method {other:?}")),
    };
    match format {
        "text" => {
            let _ = writeln!(out, "{value}");
        }
        _ => {
            let _ = writeln!(out, "{}", value.to_json());
        }
    }
    Ok(0)
}

fn cmd_table(args: &[&str], out: &mut dyn Write) -> Result<i32, String> {
    let (positionals, flags) = split_args(args, &["max", "format"])?;
    if !positionals.is_empty() {
        return Err(format!(
            "table takes no positional arguments, got {positionals:?}"
        ));
    }
    let max_sum = parse_index(flags.get("max").ok_or("table needs --max S")?, "--max")?;
    let format = flags.get("format").copied().unwrap_or("csv");

    // deterministic order: ascending m+n, then ascending n, with m >= n
    let rows: Vec<(u32, u32, PiRational)> = (0..=max_sum)
        .flat_map(|s| (0..=s / 2).map(move |n| (s - n, n)))
        .map(|(m, n)| (m, n, integral_exact(m, n)))
        .collect();

    let decimal_text =
        |v: &PiRational| exact_to_f64(v).map_or_else(|| "overflow".to_string(), decimal15);
    match format {
        "csv" => {
            let _ = writeln!(out, "m,n,exact,decimal");
            for (m, n, v) in &rows {
                let _ = writeln!(out, "{m},{n},{v},{}", decimal_text(v));
            }
        }
        "markdown" => {
            let _ = writeln!(out, "| m | n | exact | decimal |");
            let _ = writeln!(out, "|---|---|-------|---------|");
            for (m, n, v) in &rows {
                let _ = writeln!(out, "| {m} | {n} | {v} | {} |", decimal_text(v));
            }
        }
        "json" => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|(m, n, v)| {
                    json!({
                        "m": m,
                        "n": n,
                        "exact": v.to_json(),
                        "decimal": exact_to_f64(v), // null once past the double range
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", Value::Array(json_rows));
        }
        other => {
            return Err(format!(
                "unknown format {other:?} (expected csv, json or markdown)"
            ))
        }
    }
    Ok(0)
}

fn cmd_verify(args: &[&str], out: &mut dyn Write) -> Result<i32, String> {
    let (positionals, flags) = split_args(args, &["max", "tol", "format"])?;
    if !positionals.is_empty() {
        return Err(format!(
            "verify takes no positional arguments, got {positionals:?}"
        ));
    }
    let max_sum = parse_index(flags.get("max").ok_or("verify needs --max S")?, "--max")?;
    let rel_tol = match flags.get("tol") {
        Some(t) => t
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t >= MIN_REL_TOL)
            .ok_or_else(|| format!("--tol must be a number >= {MIN_REL_TOL:e}, got {t:?}"))?,
        None => DEFAULT_REL_TOL,
    };
    let format = flags.get("format").copied().unwrap_or("json");
    if !matches!(format, "json" | "markdown") {
        return Err(format!(
            "unknown format {format:?} (expected json or markdown)"
        ));
    }

    let report = VerificationReport::build(max_sum, rel_tol);
    match format {
        "json" => {
            let _ = writeln!(out, "{}", report.to_json());
        }
        _ => {
            let _ = write!(out, "{}", report.to_markdown());
        }
    }
    Ok(report.exit_code())
}

fn cmd_deriv(args: &[&str], out: &mut dyn Write) -> Result<i32, String> {
    let (positionals, flags) = split_args(args, &["format"])?;
    let [n] = positionals.as_slice() else {
        return Err(format!(
            "deriv takes exactly one order, got {}",
            positionals.len()
        ));
    };
    let n = parse_index(n, "N")?;
    let format = flags.get("format").copied().unwrap_or("text");
    let rep = derivative_rep(n);
    match format {
        "text" => {
            let _ = writeln!(
                out,
                "P_{} = {}, denominator (1+x^2)^{}",
                n,
                rep.numerator(),
                rep.denominator_exponent()
            );
        }
        "json" => {
            let coefficients: Vec<String> = rep
                .numerator()
                .coefficients()
                .iter()
                .map(ToString::to_string)
                .collect();
            let _ = writeln!(
                out,
                "{}",
                json!({
                    "n": n,
                    "coefficients": coefficients,
                    "denominator_exponent": rep.denominator_exponent(),
                })
            );
        }
        other => return Err(format!("unknown format {other:?} (expected text or json)")),
    }
    Ok(0)
}
