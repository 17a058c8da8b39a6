//! The `quadrep` command line. JSON goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 algorithmic failure or mismatch, 2 bad input,
//! 3 internal error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::descent_int::{descend, DescentError, DescentTrace};
use crate::descent_poly::real::{represent_real_quadratic_hnegx2m1, represent_real_quadratic_hx2p1, RealBranch};
use crate::descent_poly::{descend_poly_form, descend_poly_full_euclid, PolyDescentError, PolyDescentInput};
use crate::forms::{catalog_json, resolve_discriminant, resolve_form, FormCatalogEntry, QuadraticForm, Representation};
use crate::lift::{lift, verify_root, LiftError};
use crate::oracle;
use crate::rings::{gcd_trace, DivConvention, Element, Ring};

pub const CLI_SCHEMA: &str = "quadrep.cli/1";
pub const DEMO_SCHEMA: &str = "quadrep.demo/1";
const DEMO_GOLDEN: &str = include_str!("../fixtures/demo_golden.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "quadrep", version, about = "Representations by binary quadratic forms x² + gxy + hy²")]
#[command(disable_help_flag = true)]
struct Cli {
    #[arg(long, action = ArgAction::Help, global = true, help = "Print help")]
    help: Option<bool>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root z0 of Q(z, 1) modulo m = u·Q(x, y).
    #[command(disable_help_flag = true)]
    Lift(LiftArgs),
    /// Proper representation of m from a root z0.
    #[command(disable_help_flag = true)]
    Descend(DescendArgs),
    /// Checks m = u·Q(x, y) with gcd(x, y) a unit, and m | Q(z, 1).
    #[command(disable_help_flag = true)]
    Verify(VerifyArgs),
    /// Brute-force reference scans.
    #[command(disable_help_flag = true, subcommand)]
    Oracle(OracleCommand),
    /// Replays the worked examples against the golden fixture.
    #[command(disable_help_flag = true)]
    Demo(DemoArgs),
    /// Prints the discriminant catalogs.
    #[command(disable_help_flag = true)]
    Catalog,
    /// Replays a descent trace (file or `-` for stdin).
    #[command(disable_help_flag = true)]
    CheckTrace { path: Option<String> },
    /// Real quadratics without real roots as x² ± (X² + 1)y².
    #[command(disable_help_flag = true, subcommand)]
    Real(RealCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Int,
    Fp,
    Rat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    Floor,
    LeastAbs,
}

impl From<Convention> for DivConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Floor => DivConvention::Floor,
            Convention::LeastAbs => DivConvention::LeastAbs,
        }
    }
}

#[derive(Args, Debug)]
struct RingOpts {
    #[arg(long, value_enum, default_value = "int")]
    ring: RingKind,
    /// Odd prime for `--ring fp`.
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args, Debug)]
struct FormOpts {
    /// Coefficient g of x² + gxy + hy² (default 0).
    #[arg(short = 'g', allow_hyphen_values = true)]
    g: Option<String>,
    /// Coefficient h of x² + gxy + hy².
    #[arg(short = 'h', allow_hyphen_values = true)]
    h: Option<String>,
}

#[derive(Args, Debug)]
struct LiftArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    form: FormOpts,
    #[arg(short = 'x', allow_hyphen_values = true)]
    x: String,
    #[arg(short = 'y', allow_hyphen_values = true)]
    y: String,
    #[arg(short = 'u', allow_hyphen_values = true, default_value = "1")]
    u: String,
}

#[derive(Args, Debug)]
struct DescendArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    form: FormOpts,
    /// Integer form by discriminant, instead of -g/-h.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["g", "h"])]
    discriminant: Option<i64>,
    /// The element to represent.
    #[arg(short = 'm', allow_hyphen_values = true)]
    m: String,
    /// A root of Q(z, 1) modulo m.
    #[arg(short = 'z', allow_hyphen_values = true)]
    z: String,
    #[arg(long, value_enum, default_value = "floor")]
    convention: Convention,
    /// Step limit for positive discriminants [default: 64 + 10·bits(m)].
    #[arg(long, env = "QUADREP_MAX_STEPS")]
    max_steps: Option<u64>,
    /// Include the descent trace in the output.
    #[arg(long)]
    trace: bool,
    /// Polynomial rings: read x, y off the complete Euclidean run.
    #[arg(long)]
    full_euclid: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    form: FormOpts,
    #[arg(short = 'm', allow_hyphen_values = true)]
    m: String,
    #[arg(short = 'x', allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(short = 'y', allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(short = 'u', allow_hyphen_values = true, default_value = "1")]
    u: String,
    #[arg(short = 'z', allow_hyphen_values = true)]
    z: Option<String>,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// All z in [0, |m|) with m | Q(z, 1).
    #[command(disable_help_flag = true)]
    Roots {
        #[command(flatten)]
        form: FormOpts,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
    },
    /// All proper (x, y, u) with m = u·Q(x, y), |x|, |y| ≤ bound.
    #[command(disable_help_flag = true)]
    Reps {
        #[command(flatten)]
        form: FormOpts,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// All z over F_p with deg z ≤ max-deg and m | Q(z, 1).
    #[command(disable_help_flag = true)]
    PolyRoots {
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        form: FormOpts,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
        #[arg(long)]
        max_deg: u32,
    },
}

#[derive(Subcommand, Debug)]
enum RealCommand {
    /// aX² + 2bX + c = x² + (X² + 1)y².
    #[command(disable_help_flag = true)]
    Hx2p1 {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: f64,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: f64,
        #[arg(short = 'c', allow_hyphen_values = true)]
        c: f64,
    },
    /// X² + 2vX + w = u·(x² − (X² + 1)y²).
    #[command(disable_help_flag = true)]
    Hnegx2m1 {
        #[arg(short = 'v', allow_hyphen_values = true)]
        v: f64,
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: f64,
    },
}

#[derive(Args, Debug)]
struct DemoArgs {
    /// List the examples without running them.
    #[arg(long)]
    list: bool,
    /// Golden fixture to compare against instead of the built-in one.
    #[arg(long)]
    golden: Option<String>,
}

/// What a command produced: JSON for stdout and an exit code.
struct Outcome {
    json: Value,
    code: i32,
}

enum CliError {
    Input(String),
    Internal(String),
}

type CmdResult = Result<Outcome, CliError>;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn ok(mut json: Value) -> CmdResult {
    json["schema"] = CLI_SCHEMA.into();
    Ok(Outcome { json, code: EXIT_OK })
}

fn failed(mut json: Value) -> CmdResult {
    json["schema"] = CLI_SCHEMA.into();
    Ok(Outcome { json, code: EXIT_FAILURE })
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Lift(a) => cmd_lift(&a),
        Command::Descend(a) => cmd_descend(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Oracle(c) => cmd_oracle(&c),
        Command::Demo(a) => cmd_demo(&a),
        Command::Catalog => match serde_json::from_str::<Value>(&catalog_json()) {
            Ok(v) => ok(v),
            Err(e) => Err(CliError::Internal(e.to_string())),
        },
        Command::CheckTrace { path } => cmd_check_trace(path.as_deref(), stdin),
        Command::Real(c) => cmd_real(&c),
    };
    match result {
        Ok(o) => {
            if writeln!(out, "{}", o.json).is_err() {
                return EXIT_INTERNAL;
            }
            o.code
        }
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn ring_of(opts: &RingOpts) -> Result<Ring, CliError> {
    match (opts.ring, opts.prime) {
        (RingKind::Int, None) => Ok(Ring::Integers),
        (RingKind::Rat, None) => Ok(Ring::PolyOverRationals),
        (RingKind::Fp, Some(p)) => Ring::poly_fp(p).map_err(input),
        (RingKind::Fp, None) => Err(input("--ring fp needs --prime")),
        (_, Some(_)) => Err(input("--prime only applies to --ring fp")),
    }
}

fn parse(ring: Ring, what: &str, text: &str) -> Result<Element, CliError> {
    ring.parse(text).map_err(|e| input(format!("{what}: {e}")))
}

fn form_of(ring: Ring, opts: &FormOpts) -> Result<QuadraticForm, CliError> {
    let g = parse(ring, "-g", opts.g.as_deref().unwrap_or("0"))?;
    let h = parse(ring, "-h", opts.h.as_deref().ok_or_else(|| input("-h is required"))?)?;
    QuadraticForm::new(g, h).map_err(input)
}

fn cmd_lift(a: &LiftArgs) -> CmdResult {
    let ring = ring_of(&a.ring)?;
    let form = form_of(ring, &a.form)?;
    let rep = Representation::new(parse(ring, "-x", &a.x)?, parse(ring, "-y", &a.y)?, parse(ring, "-u", &a.u)?);
    match lift(&form, &rep) {
        Ok(l) => ok(json!({ "m": l.m.to_string(), "z0": l.z0.to_string() })),
        Err(e @ LiftError::MixedRings) => Err(CliError::Internal(e.to_string())),
        Err(e) => Err(input(e)),
    }
}

/// The catalog entry for an integer form given by discriminant or by
/// coefficients; positive discriminants outside the catalog fall back to
/// the principal form.
fn int_entry(a: &DescendArgs) -> Result<FormCatalogEntry, CliError> {
    if let Some(d) = a.discriminant {
        return resolve_discriminant(d).ok_or_else(|| input(format!("discriminant {d} is not in the catalogs")));
    }
    let form = form_of(Ring::Integers, &a.form)?;
    let g = i64::try_from(form.g().as_int().unwrap()).map_err(input)?;
    let h = i64::try_from(form.h().as_int().unwrap()).map_err(input)?;
    resolve_form(g, h).ok_or_else(|| input(format!("x² + {g}xy + {h}y² is not a catalog form")))
}

fn cmd_descend(a: &DescendArgs) -> CmdResult {
    let ring = ring_of(&a.ring)?;
    if ring == Ring::Integers {
        return descend_int_cmd(a);
    }
    if a.discriminant.is_some() {
        return Err(input("--discriminant applies to --ring int only"));
    }
    let form = form_of(ring, &a.form)?;
    let m = parse(ring, "-m", &a.m)?;
    let z = parse(ring, "-z", &a.z)?;
    let poly_err = |e: PolyDescentError| match e {
        PolyDescentError::NotRepresentable(_) => {
            failed(json!({ "status": "failure", "reason": "NotRepresentable", "message": e.to_string() }))
        }
        PolyDescentError::PatternMismatch(_) => Err(CliError::Internal(e.to_string())),
        other => Err(input(other)),
    };
    if a.full_euclid {
        if !form.g().is_zero() {
            return Err(input("--full-euclid needs g = 0"));
        }
        let parsed = match PolyDescentInput::new(form.h().clone(), m, z) {
            Ok(p) => p,
            Err(e) => return poly_err(e),
        };
        return match descend_poly_full_euclid(&parsed) {
            Ok(f) => {
                let r = &f.representation;
                let strs = |v: &[Element]| v.iter().map(|e| e.to_string()).collect::<Vec<_>>();
                ok(json!({
                    "status": "ok",
                    "x": r.x.to_string(),
                    "y": r.y.to_string(),
                    "u": r.u.to_string(),
                    "quotients": strs(&f.quotients),
                    "half": strs(&f.half),
                }))
            }
            Err(e) => poly_err(e),
        };
    }
    match descend_poly_form(&form, &m, &z) {
        Ok(r) => ok(json!({ "status": "ok", "x": r.x.to_string(), "y": r.y.to_string(), "u": r.u.to_string() })),
        Err(e) => poly_err(e),
    }
}

fn descend_int_cmd(a: &DescendArgs) -> CmdResult {
    let entry = int_entry(a)?;
    let m: BigInt = a.m.trim().parse().map_err(|e| input(format!("-m: {e}")))?;
    let z: BigInt = a.z.trim().parse().map_err(|e| input(format!("-z: {e}")))?;
    let conv = a.convention.into();
    let outcome = match descend(&entry, &m, &z, conv, a.max_steps) {
        Ok(o) => o,
        Err(e @ (DescentError::PreconditionViolated { .. } | DescentError::ZeroModulus | DescentError::ZeroStepLimit)) => {
            return Err(input(e))
        }
        Err(e) => return Err(CliError::Internal(e.to_string())),
    };
    match &outcome.result {
        Ok(r) => {
            let mut v = json!({ "status": "ok", "x": r.x.to_string(), "y": r.y.to_string(), "u": r.u.to_string() });
            if a.trace {
                v["trace"] = outcome.trace.to_json();
            }
            ok(v)
        }
        Err(f) => {
            let mut v = serde_json::to_value(f).map_err(|e| CliError::Internal(e.to_string()))?;
            v["status"] = "failure".into();
            v["message"] = f.to_string().into();
            v["trace"] = outcome.trace.to_json();
            failed(v)
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let ring = ring_of(&a.ring)?;
    let form = form_of(ring, &a.form)?;
    let m = parse(ring, "-m", &a.m)?;
    let mut v = json!({});
    let mut good = true;
    match (&a.x, &a.y) {
        (Some(x), Some(y)) => {
            let (x, y, u) = (parse(ring, "-x", x)?, parse(ring, "-y", y)?, parse(ring, "-u", &a.u)?);
            let q = form.evaluate(&x, &y).map_err(input)?;
            let value = &u * &q;
            let proper = u.is_unit() && gcd_trace(&x, &y, DivConvention::Floor).map_err(input)?.gcd.is_one();
            let equal = value == m;
            good &= equal && proper;
            v["value"] = value.to_string().into();
            v["representation_ok"] = equal.into();
            v["proper"] = proper.into();
        }
        (None, None) => {}
        _ => return Err(input("-x and -y go together")),
    }
    if let Some(z) = &a.z {
        let z = parse(ring, "-z", z)?;
        let root = verify_root(&form, &m, &z);
        good &= root;
        v["root_ok"] = root.into();
    }
    if a.x.is_none() && a.z.is_none() {
        return Err(input("nothing to verify: give -x/-y and/or -z"));
    }
    v["ok"] = good.into();
    if good {
        ok(v)
    } else {
        failed(v)
    }
}

fn int_form(opts: &FormOpts) -> Result<QuadraticForm, CliError> {
    form_of(Ring::Integers, opts)
}

fn cmd_oracle(c: &OracleCommand) -> CmdResult {
    let int = |s: &str| s.trim().parse::<BigInt>().map_err(|e| input(format!("-m: {e}")));
    match c {
        OracleCommand::Roots { form, m } => {
            let roots = oracle::roots_mod(&int_form(form)?, &int(m)?).map_err(input)?;
            ok(json!({ "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>() }))
        }
        OracleCommand::Reps { form, m, bound } => {
            let reps = oracle::reps_bounded(&int_form(form)?, &int(m)?, *bound).map_err(input)?;
            let reps: Vec<Value> = reps
                .iter()
                .map(|(x, y, u)| json!({ "x": x.to_string(), "y": y.to_string(), "u": u.to_string() }))
                .collect();
            ok(json!({ "reps": reps }))
        }
        OracleCommand::PolyRoots { prime, form, m, max_deg } => {
            let ring = Ring::poly_fp(*prime).map_err(input)?;
            let q = form_of(ring, form)?;
            let roots = oracle::poly_roots_mod(&q, &parse(ring, "-m", m)?, *max_deg).map_err(input)?;
            ok(json!({ "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>() }))
        }
    }
}

fn cmd_check_trace(path: Option<&str>, stdin: &mut dyn Read) -> CmdResult {
    let text = match path {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(input)?;
            s
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| input(format!("{p}: {e}")))?,
    };
    // accept either a bare trace or a `descend --trace` document
    let v: Value = serde_json::from_str(&text).map_err(input)?;
    let trace_v = v.get("trace").cloned().unwrap_or(v);
    let trace = DescentTrace::from_json(&trace_v.to_string()).map_err(input)?;
    match oracle::check_trace(&trace) {
        Ok(()) => ok(json!({ "ok": true, "steps": trace.steps.len() })),
        Err(msg) => failed(json!({ "ok": false, "error": msg })),
    }
}

fn cmd_real(c: &RealCommand) -> CmdResult {
    match *c {
        RealCommand::Hx2p1 { a, b, c } => {
            let r = represent_real_quadratic_hx2p1(a, b, c).map_err(input)?;
            ok(json!({ "x0": r.x0, "x1": r.x1, "y": r.y, "u": r.u, "residual": r.residual([c, 2.0 * b, a], 1.0) }))
        }
        RealCommand::Hnegx2m1 { v, w } => {
            let (r, branch) = represent_real_quadratic_hnegx2m1(v, w).map_err(input)?;
            let branch = match branch {
                RealBranch::BEqualsMinusOne => "b_equals_minus_one",
                RealBranch::Bisection => "bisection",
            };
            ok(json!({
                "x0": r.x0, "x1": r.x1, "y": r.y, "u": r.u,
                "branch": branch,
                "residual": r.residual([w, 2.0 * v, 1.0], -1.0),
            }))
        }
    }
}

/// Every key of `expected` must appear in `actual` with an equal value;
/// objects are compared recursively.
fn json_subset(expected: &Value, actual: &Value) -> bool {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e.iter().all(|(k, v)| a.get(k).is_some_and(|av| json_subset(v, av))),
        _ => expected == actual,
    }
}

fn cmd_demo(a: &DemoArgs) -> CmdResult {
    let text = match &a.golden {
        Some(p) => std::fs::read_to_string(p).map_err(|e| input(format!("{p}: {e}")))?,
        None => DEMO_GOLDEN.to_string(),
    };
    let golden: Value = serde_json::from_str(&text).map_err(input)?;
    if golden.get("schema").and_then(Value::as_str) != Some(DEMO_SCHEMA) {
        return Err(input(format!("golden fixture must have schema {DEMO_SCHEMA:?}")));
    }
    let examples = golden["examples"].as_array().ok_or_else(|| input("golden fixture has no examples"))?;
    if a.list {
        let list: Vec<Value> = examples
            .iter()
            .map(|e| json!({ "name": e["name"], "description": e["description"], "args": e["args"] }))
            .collect();
        return ok(json!({ "examples": list }));
    }
    let mut results = Vec::new();
    let mut all = true;
    for e in examples {
        let args: Vec<String> = e["args"]
            .as_array()
            .ok_or_else(|| input("example without args"))?
            .iter()
            .filter_map(|s| s.as_str().map(String::from))
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("quadrep".to_string()).chain(args), &mut std::io::empty(), &mut out, &mut err);
        let actual: Value = serde_json::from_slice(&out).unwrap_or(Value::Null);
        let exit_ok = e["exit"].as_i64() == Some(code as i64);
        let matched = exit_ok && json_subset(&e["expect"], &actual);
        all &= matched;
        let mut r = json!({ "name": e["name"], "status": if matched { "match" } else { "mismatch" } });
        if !matched {
            r["exit"] = code.into();
            r["actual"] = actual;
        }
        results.push(r);
    }
    let v = json!({ "ok": all, "results": results });
    if all {
        ok(v)
    } else {
        failed(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("quadrep").chain(args.iter().copied()), &mut std::io::empty(), &mut out, &mut err);
        let v = serde_json::from_slice(&out).unwrap_or(Value::Null);
        (code, v, String::from_utf8(err).unwrap())
    }

    #[test]
    fn subset_matching() {
        let a = json!({ "x": "1", "t": { "k": 1, "j": 2 } });
        assert!(json_subset(&json!({ "t": { "k": 1 } }), &a));
        assert!(!json_subset(&json!({ "t": { "k": 2 } }), &a));
        assert!(!json_subset(&json!({ "z": 1 }), &a));
    }

    #[test]
    fn short_h_is_a_coefficient() {
        let (code, v, _) = call(&["lift", "-g", "1", "-h", "5", "-x", "9", "-y", "5"]);
        assert_eq!(code, 0);
        assert_eq!(v["m"], "251");
        let (code, _, err) = call(&["lift", "-h"]);
        assert_eq!(code, 2, "{err}");
    }

    #[test]
    fn ring_options() {
        assert_eq!(call(&["lift", "--ring", "fp", "-h", "2", "-x", "1", "-y", "1"]).0, 2);
        assert_eq!(call(&["lift", "--prime", "5", "-h", "2", "-x", "1", "-y", "1"]).0, 2);
        assert_eq!(call(&["lift", "--ring", "fp", "--prime", "4", "-h", "2", "-x", "1", "-y", "1"]).0, 2);
    }

    #[test]
    fn descend_form_checks() {
        assert_eq!(call(&["descend", "-g", "1", "-h", "5", "-m", "251", "-z", "52"]).1["x"], "9");
        // x² + 5y² has discriminant −20, not catalogued
        assert_eq!(call(&["descend", "-g", "0", "-h", "5", "-m", "6", "-z", "1"]).0, 2);
        // discriminant −4 but not the catalog form
        assert_eq!(call(&["descend", "-g", "2", "-h", "2", "-m", "5", "-z", "1"]).0, 2);
        assert_eq!(call(&["descend", "--discriminant", "-20", "-m", "6", "-z", "1"]).0, 2);
    }
}
