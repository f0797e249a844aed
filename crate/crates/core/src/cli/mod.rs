//! The `suq2` command line: argument handling, dispatch and JSON reports.
//!
//! Every report is a JSON object with `schema`, `command`, `algebra`,
//! `result`, `residuals` and `anchor`. Exit codes: 0 pass, 1 fail, 2 usage
//! or parse error.

pub mod parse;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{confluence_check, suq2_presentation, torus_presentation, uq2_presentation, Degree, Presentation};
use crate::braided::{grading_flip, tensor_power};
use crate::exec::Exec;
use crate::morphisms::zeta_of;
use crate::numeric::{oracle_batch, TruncatedRep};
use crate::scalars::{Notation, Scalar};
use crate::verify::{anchor_of, run_all, run_check, VerifyOptions, CHECK_IDS};

pub use parse::{parse, parse_element, Expr, ParseError};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraSel {
    Suq2,
    Torus,
    Uq2,
    #[value(name = "suq2-tensor2")]
    Suq2Tensor2,
    #[value(name = "suq2-tensor3")]
    Suq2Tensor3,
    #[value(name = "suq2-flip")]
    Suq2Flip,
}

impl AlgebraSel {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraSel::Suq2 => "suq2",
            AlgebraSel::Torus => "torus",
            AlgebraSel::Uq2 => "uq2",
            AlgebraSel::Suq2Tensor2 => "suq2-tensor2",
            AlgebraSel::Suq2Tensor3 => "suq2-tensor3",
            AlgebraSel::Suq2Flip => "suq2-flip",
        }
    }

    /// The selected algebra with formal parameters.
    pub fn build(self) -> Arc<Presentation> {
        let q = Scalar::q();
        let a = suq2_presentation(&q).expect("builtin presentation");
        let z = zeta_of(&a).expect("formal q");
        match self {
            AlgebraSel::Suq2 => a,
            AlgebraSel::Torus => torus_presentation(&Scalar::zeta()).expect("formal zeta"),
            AlgebraSel::Uq2 => uq2_presentation(&q).expect("builtin presentation"),
            AlgebraSel::Suq2Tensor2 => tensor_power(&a, 2, &z).expect("unimodular"),
            AlgebraSel::Suq2Tensor3 => tensor_power(&a, 3, &z).expect("unimodular"),
            AlgebraSel::Suq2Flip => grading_flip(&a),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NumericKind {
    Relations,
    Compare,
    Spectrum,
}

#[derive(Debug, Parser)]
#[command(name = "suq2", version, about = "Symbolic and numeric checks for the braided quantum group SU_q(2)")]
pub struct Cli {
    /// Algebra the expressions live in.
    #[arg(long, value_enum, default_value = "suq2", global = true)]
    pub algebra: AlgebraSel,
    /// Render with α, γ, q̄ instead of a, g, qb.
    #[arg(long, global = true)]
    pub unicode: bool,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Nf { expr: String },
    /// Degree of an expression.
    Deg { expr: String },
    /// Normal form of a product.
    Mul { left: String, right: String },
    /// Normal form of the adjoint.
    Adjoint { expr: String },
    /// Runs a named check, or `all`.
    Verify {
        id: String,
        /// Word length for the cancellation closure.
        #[arg(long, default_value_t = 3)]
        cancel_len: usize,
    },
    /// Critical pairs, exhaustive words and random words.
    Confluence {
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Truncated operator model at a numeric q.
    Numeric {
        #[arg(value_enum)]
        kind: NumericKind,
        /// `re,im` or `re`.
        #[arg(long, default_value = "0.5", value_parser = parse_complex, allow_hyphen_values = true)]
        q: Complex64,
        #[arg(long = "N", default_value_t = 30)]
        n: usize,
        #[arg(long = "M", default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random expressions for `compare`.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
        /// Expressions to compare instead of random ones.
        #[arg(long = "expr")]
        exprs: Vec<String>,
        /// Tolerance for constructed identities and the spectrum.
        #[arg(long, default_value_t = 1e-13)]
        tol_identity: f64,
        /// Tolerance for raw-versus-normal-form comparisons.
        #[arg(long, default_value_t = 1e-11)]
        tol_compare: f64,
    },
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("'{t}' is not a number"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re,im, got '{s}'")),
    }
}

/// What a run produced: the report text, stderr text and exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Report {
    command: String,
    algebra: String,
    result: Value,
    residuals: Vec<Value>,
    anchor: String,
    extra: Vec<(&'static str, Value)>,
    code: i32,
}

impl Report {
    fn new(command: &str, algebra: &str) -> Report {
        Report {
            command: command.into(),
            algebra: algebra.into(),
            result: Value::Null,
            residuals: Vec::new(),
            anchor: String::new(),
            extra: Vec::new(),
            code: 0,
        }
    }

    fn verdict(&mut self, passed: bool) {
        self.result = json!(if passed { "pass" } else { "fail" });
        self.code = if passed { 0 } else { 1 };
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "algebra": self.algebra,
            "result": self.result,
            "residuals": self.residuals,
            "anchor": self.anchor,
        });
        for (k, x) in &self.extra {
            v[*k] = x.clone();
        }
        v
    }
}

fn usage_error(command: &str, algebra: &str, e: &ParseError, what: &str) -> Outcome {
    let v = json!({
        "schema": SCHEMA,
        "command": command,
        "algebra": algebra,
        "result": "error",
        "error": {"kind": "parse", "column": e.column, "message": e.message, "input": what},
    });
    Outcome {
        stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
        stderr: format!("error: {e}\n"),
        code: 2,
    }
}

fn plain_error(command: &str, algebra: &str, msg: String) -> Outcome {
    let v = json!({"schema": SCHEMA, "command": command, "algebra": algebra, "result": "error", "error": {"kind": "usage", "message": msg}});
    Outcome { stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("json")), stderr: format!("error: {msg}\n"), code: 2 }
}

/// Parses arguments and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let out = execute(&cli);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.stdout) {
            return Outcome { stderr: format!("{}error: cannot write {}: {e}\n", out.stderr, path.display()), code: 2, ..out };
        }
    }
    out
}

pub fn execute(cli: &Cli) -> Outcome {
    let notation = if cli.unicode { Notation::Unicode } else { Notation::Ascii };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let alg_name = cli.algebra.name();
    let report = match &cli.command {
        Command::Nf { expr } | Command::Adjoint { expr } | Command::Deg { expr } => {
            let name = match &cli.command {
                Command::Nf { .. } => "nf",
                Command::Adjoint { .. } => "adjoint",
                _ => "deg",
            };
            let p = cli.algebra.build();
            let x = match parse_element(expr, &p) {
                Ok(x) => x,
                Err(e) => return usage_error(name, alg_name, &e, expr),
            };
            let mut r = Report::new(name, alg_name);
            match &cli.command {
                Command::Nf { .. } => r.result = json!(x.render(notation)),
                Command::Adjoint { .. } => r.result = json!(x.adjoint().render(notation)),
                _ => {
                    r.result = json!(match x.degree() {
                        Degree::Zero => "0".to_string(),
                        Degree::Homogeneous(d) => d.to_string(),
                        Degree::Inhomogeneous => "inhomogeneous".to_string(),
                    });
                    r.extra.push(("degrees", json!(x.degrees())));
                }
            }
            r
        }
        Command::Mul { left, right } => {
            let p = cli.algebra.build();
            let mut xs = Vec::new();
            for s in [left, right] {
                match parse_element(s, &p) {
                    Ok(x) => xs.push(x),
                    Err(e) => return usage_error("mul", alg_name, &e, s),
                }
            }
            let mut r = Report::new("mul", alg_name);
            r.result = json!((&xs[0] * &xs[1]).render(notation));
            r
        }
        Command::Verify { id, cancel_len } => {
            let opts = VerifyOptions { exec, notation, cancel_len: *cancel_len, ..Default::default() };
            if id == "all" {
                let reports = run_all(&opts);
                let passed = reports.iter().all(|c| c.passed);
                let mut r = Report::new("verify all", "all");
                r.verdict(passed);
                r.residuals = reports.iter().filter(|c| !c.passed).map(|c| json!(c.id)).collect();
                r.anchor = "every named check".into();
                r.extra.push(("checks", serde_json::to_value(&reports).expect("json")));
                r
            } else {
                let Ok(c) = run_check(id, &opts) else {
                    return plain_error("verify", alg_name, format!("unknown-check: {id}; expected one of all, {}", CHECK_IDS.join(", ")));
                };
                let mut r = Report::new(&format!("verify {id}"), &c.algebra);
                r.verdict(c.passed);
                r.residuals = c.residuals.iter().map(|s| json!(s)).collect();
                r.anchor = anchor_of(id).unwrap_or_default().into();
                r.extra.push(("notes", json!(c.notes)));
                r
            }
        }
        Command::Confluence { maxlen, trials, seed } => {
            let p = cli.algebra.build();
            let c = confluence_check(&p, *maxlen, *trials, *seed, exec);
            let mut r = Report::new("confluence", alg_name);
            r.verdict(c.passed());
            r.residuals = c
                .divergences
                .iter()
                .map(|d| json!(format!("{} {}: {} vs {}", d.source, d.word, d.left, d.right)))
                .chain(c.measure_violations.iter().map(|m| json!(format!("measure: {m}"))))
                .chain(c.nontermination.iter().map(|m| json!(format!("nonterminating: {m}"))))
                .collect();
            r.anchor = "every overlap of rewrite rules resolves to one normal form".into();
            r.extra.push((
                "stats",
                json!({"critical_pairs": c.critical_pairs, "words_checked": c.words_checked, "maxlen": c.maxlen, "trials": c.trials, "seed": c.seed}),
            ));
            r
        }
        Command::Numeric { kind, q, n, m, seed, count, maxlen, exprs, tol_identity, tol_compare } => {
            let rep = match TruncatedRep::build(*q, *n, *m) {
                Ok(r) => r,
                Err(e) => return plain_error("numeric", "suq2", e.to_string()),
            };
            let mut r = Report::new(
                match kind {
                    NumericKind::Relations => "numeric relations",
                    NumericKind::Compare => "numeric compare",
                    NumericKind::Spectrum => "numeric spectrum",
                },
                "suq2",
            );
            r.extra.push(("model", json!({"q": [q.re, q.im], "N": n, "M": m})));
            match kind {
                NumericKind::Relations => {
                    let res = rep.relation_residuals();
                    r.verdict(res.max_interior() <= *tol_identity);
                    r.residuals = res.residuals.iter().map(|x| json!(x.interior)).collect();
                    r.anchor = "the five SU_q(2) relations on the interior of the truncated model".into();
                    r.extra.push(("relations", serde_json::to_value(&res.residuals).expect("json")));
                    r.extra.push(("tolerance", json!(tol_identity)));
                }
                NumericKind::Spectrum => {
                    let dev = rep.spectrum_deviation();
                    r.verdict(dev <= *tol_identity);
                    r.residuals = vec![json!(dev)];
                    r.anchor = "γ is normal with singular values |q|ⁿ".into();
                    r.extra.push(("singular_values", json!(rep.gamma_singular_values())));
                    r.extra.push(("tolerance", json!(tol_identity)));
                }
                NumericKind::Compare => {
                    let p = suq2_presentation(&Scalar::q()).expect("builtin presentation");
                    let deviations = if exprs.is_empty() {
                        match oracle_batch(&rep, &p, *count, *maxlen, *seed, exec) {
                            Ok(b) => b.deviations,
                            Err(e) => return plain_error("numeric compare", "suq2", e.to_string()),
                        }
                    } else {
                        let mut out = Vec::new();
                        for s in exprs {
                            let raw = match parse(s).and_then(|e| e.expand(&p)) {
                                Ok(raw) => raw,
                                Err(e) => return usage_error("numeric compare", "suq2", &e, s),
                            };
                            let d = raw.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
                            match rep.oracle_compare(&p, &raw, d) {
                                Ok(x) => out.push(x),
                                Err(e) => return plain_error("numeric compare", "suq2", e.to_string()),
                            }
                        }
                        out
                    };
                    let worst = deviations.iter().copied().fold(0.0, f64::max);
                    r.verdict(worst <= *tol_compare);
                    r.residuals = deviations.iter().map(|x| json!(x)).collect();
                    r.anchor = "unreduced expressions and their normal forms agree as operators".into();
                    r.extra.push(("max_deviation", json!(worst)));
                    r.extra.push(("tolerance", json!(tol_compare)));
                    r.extra.push(("seed", json!(seed)));
                }
            }
            r
        }
    };
    Outcome {
        stdout: format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("json")),
        stderr: String::new(),
        code: report.code,
    }
}
